#include "hqt/serialize.hpp"

#include <fstream>
#include <sstream>

#include "hqt/errors.hpp"

namespace hqt {

Json cycnum_to_json(const CycNum& a) {
    const CycField& f = CycField::get(a.order());
    Json j;
    j["order"] = a.order();
    Json coeffs = Json::array();
    for (int i = 0; i < f.degree; ++i)
        coeffs.push_back(a.coeff(i).str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

CycNum cycnum_from_json(const Json& j) {
    int order = j.at("order").get<int>();
    const CycField& f = CycField::get(order);
    const Json& coeffs = j.at("coeffs");
    if ((int)coeffs.size() != f.degree)
        throw InvalidData("coeffs must have phi(order) entries");
    std::vector<Rational> c(f.degree);
    for (int i = 0; i < f.degree; ++i)
        c[i] = Rational::parse(coeffs[i].get<std::string>());
    return CycNum::from_coeffs(order, std::move(c));
}

std::string element_key(const AbelianGroup& g, int idx) {
    std::vector<int> e = g.exps_of(idx);
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

int element_from_key(const AbelianGroup& g, const std::string& s) {
    std::vector<int> e;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        e.push_back(std::stoi(part));
    if (e.size() != g.invariants.size())
        throw InvalidData("element key has wrong arity: " + s);
    return g.index_of(e);
}

Json extension_to_json(const ExtensionData& d) {
    const AbelianGroup& G = d.group;
    Json j;
    j["invariants"] = G.invariants;
    Json act;
    for (size_t i = 0; i < d.action.generator_images.size(); ++i)
        act["gen_" + std::to_string(i)] = d.action.generator_images[i];
    j["action"] = std::move(act);
    Json sig;
    for (int g = 0; g < G.size(); ++g)
        sig[element_key(G, g)] = cycnum_to_json(d.sig(g));
    j["sigma"] = std::move(sig);
    Json tau;
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            tau[element_key(G, g) + "|" + element_key(G, h)] = cycnum_to_json(d.tu(g, h));
    j["tau"] = std::move(tau);
    return j;
}

ExtensionData extension_from_json(const Json& j) {
    ExtensionData d;
    d.group.invariants = j.at("invariants").get<std::vector<int>>();
    const AbelianGroup& G = d.group;
    int n = G.size();
    for (size_t i = 0; i < G.invariants.size(); ++i)
        d.action.generator_images.push_back(
            j.at("action").at("gen_" + std::to_string(i)).get<std::vector<int>>());
    d.action.compile(d.group);

    d.sigma.assign(n, CycNum());
    for (auto& [key, val] : j.at("sigma").items())
        d.sigma[element_from_key(G, key)] = cycnum_from_json(val);
    d.tau.assign((size_t)n * n, CycNum());
    for (auto& [key, val] : j.at("tau").items()) {
        auto bar = key.find('|');
        if (bar == std::string::npos)
            throw InvalidData("tau key must be 'g|h': " + key);
        int g = element_from_key(G, key.substr(0, bar));
        int h = element_from_key(G, key.substr(bar + 1));
        d.tau[(size_t)g * n + h] = cycnum_from_json(val);
    }

    int order = 0;
    for (const auto& v : d.sigma) {
        if (v.order() == 0) throw InvalidData("sigma table incomplete");
        if (order == 0) order = v.order();
        if (v.order() != order) throw InvalidData("all values must share one ambient order");
    }
    for (const auto& v : d.tau) {
        if (v.order() == 0) throw InvalidData("tau table incomplete");
        if (v.order() != order) throw InvalidData("all values must share one ambient order");
    }
    d.ambient_order = order;
    return d;
}

ExtensionData load_extension_data(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidSpec("cannot open data file: " + path);
    Json j = Json::parse(in);
    return extension_from_json(j);
}

Json rmatrix_to_json(const RMatrix& r) {
    const HopfAlgebra& h = *r.H;
    const AbelianGroup& G = h.data.group;
    Json j;
    for (int which = 1; which <= 4; ++which) {
        Json blk;
        for (int g = 0; g < h.gsize; ++g)
            for (int k = 0; k < h.gsize; ++k) {
                const CycNum& c = r.blk(which, g, k);
                if (c.is_zero()) continue;
                blk[element_key(G, g) + "|" + element_key(G, k)] = cycnum_to_json(c);
            }
        j["w" + std::to_string(which)] = std::move(blk);
    }
    return j;
}

RMatrix rmatrix_from_json(const Json& j, const HopfAlgebra& h) {
    RMatrix r = RMatrix::zero(h);
    const AbelianGroup& G = h.data.group;
    for (int which = 1; which <= 4; ++which) {
        auto it = j.find("w" + std::to_string(which));
        if (it == j.end()) continue;
        for (auto& [key, val] : it->items()) {
            auto bar = key.find('|');
            int g = element_from_key(G, key.substr(0, bar));
            int k = element_from_key(G, key.substr(bar + 1));
            r.blk(which, g, k) = embed(cycnum_from_json(val), h.order);
        }
    }
    return r;
}

Json hopf_to_json(const HopfAlgebra& h) {
    Json j;
    j["dim"] = h.dim;
    j["ambient_order"] = h.order;
    Json mult = Json::array();
    for (int u = 0; u < h.dim; ++u)
        for (int v = 0; v < h.dim; ++v) {
            const auto& m = h.mul(u, v);
            if (m.idx < 0) continue;
            Json e;
            e["left"] = u;
            e["right"] = v;
            e["target"] = m.idx;
            e["coeff"] = cycnum_to_json(m.coeff);
            mult.push_back(std::move(e));
        }
    j["mult"] = std::move(mult);
    Json comult = Json::array();
    for (int b = 0; b < h.dim; ++b) {
        Json terms = Json::array();
        for (const auto& t : h.comult[b]) {
            Json e;
            e["i"] = t.i;
            e["j"] = t.j;
            e["coeff"] = cycnum_to_json(t.coeff);
            terms.push_back(std::move(e));
        }
        comult.push_back(std::move(terms));
    }
    j["comult"] = std::move(comult);
    Json counit = Json::array();
    for (int b = 0; b < h.dim; ++b)
        counit.push_back(cycnum_to_json(h.counit[b]));
    j["counit"] = std::move(counit);
    Json antipode = Json::array();
    for (int b = 0; b < h.dim; ++b) {
        Json e;
        e["target"] = h.antipode[b].idx;
        e["coeff"] = cycnum_to_json(h.antipode[b].coeff);
        antipode.push_back(std::move(e));
    }
    j["antipode"] = std::move(antipode);
    return j;
}

std::string fingerprint(const ExtensionData& d) {
    std::string s = extension_to_json(d).dump();
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", hash);
    return std::string(buf);
}

} // namespace hqt
