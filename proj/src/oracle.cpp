#include "hqt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "hqt/errors.hpp"

namespace hqt {

namespace {

// union-find over coordinates with multiplicative weights:
// val(i) = w(i) * val(root(i)), plus a zero flag per root
struct RatioUF {
    std::vector<int> parent;
    std::vector<CycNum> weight;
    std::vector<char> zero;
    int order;

    RatioUF(int n, int ord) : parent(n), weight(n, CycNum::one(ord)), zero(n, 0), order(ord) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, CycNum> find(int i) {
        if (parent[i] == i) return {i, weight[i]};
        auto [r, w] = find(parent[i]);
        parent[i] = r;
        weight[i] = weight[i] * w;
        return {i == r ? r : r, weight[i]};
    }

    bool is_zero(int i) { return zero[find(i).first]; }
    void set_zero(int i) { zero[find(i).first] = 1; }

    // val(i) = rho * val(j)
    void relate(int i, int j, const CycNum& rho) {
        auto [ri, wi] = find(i);
        auto [rj, wj] = find(j);
        if (ri == rj) {
            if (wi != rho * wj) zero[ri] = 1; // (wi - rho wj) val = 0 forces val = 0
            return;
        }
        // val(rj) = wi / (rho wj) * val(ri)
        parent[rj] = ri;
        weight[rj] = wi / (rho * wj);
        if (zero[rj]) zero[ri] = 1;
        zero[rj] = 0;
    }
};

} // namespace

bool LinearStage::contains(const TensorElement& t) const {
    const HopfAlgebra& h = *H;
    std::vector<CycNum> repval(rep.size(), CycNum::zero(h.order));
    std::vector<char> repset(rep.size(), 0);
    for (int c = 0; c < ncoords; ++c) {
        if (comp[c] < 0) {
            if (!t.c[c].is_zero()) return false;
            continue;
        }
        CycNum want = t.c[c] / ratio[c];
        if (!repset[comp[c]]) {
            repval[comp[c]] = want;
            repset[comp[c]] = 1;
        } else if (repval[comp[c]] != want) {
            return false;
        }
    }
    return true;
}

LinearStage solve_linear_stage(const HopfAlgebra& h) {
    const AbelianGroup& G = h.data.group;
    int dim = h.dim, gs = h.gsize;
    int n2 = dim * dim;
    RatioUF uf(n2, h.order);

    auto gamma = [&](int b) { return h.bgroup(b); };
    auto deg = [&](int b) { return h.bdeg(b); };
    auto shifted = [&](int b) { return deg(b) ? h.data.action.apply(gamma(b)) : gamma(b); };

    // Delta(e_g) R = R Delta(e_g): coefficient-wise this forces R_c = 0
    // whenever the group labels of the two sides disagree.
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            if (G.mul(gamma(u), gamma(v)) != G.mul(shifted(u), shifted(v)))
                uf.set_zero(u * dim + v);
        }

    // Deltaop(x) R = R Delta(x): both sides permute coordinates bijectively,
    // giving one two-term relation per target coordinate.
    std::vector<std::pair<int, CycNum>> by_lhs(n2, {-1, CycNum()}), by_rhs(n2, {-1, CycNum()});
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            int c = u * dim + v;
            {
                int g = h.data.action.apply(gamma(u)), k = h.data.action.apply(gamma(v));
                const auto& m1 = h.mul(h.bidx(g, 1), u);
                const auto& m2 = h.mul(h.bidx(k, 1), v);
                int d = m1.idx * dim + m2.idx;
                by_lhs[d] = {c, h.data.tu(k, g) * m1.coeff * m2.coeff};
            }
            {
                int g = shifted(u), k = shifted(v);
                const auto& m1 = h.mul(u, h.bidx(g, 1));
                const auto& m2 = h.mul(v, h.bidx(k, 1));
                int d = m1.idx * dim + m2.idx;
                by_rhs[d] = {c, h.data.tu(g, k) * m1.coeff * m2.coeff};
            }
        }
    for (int d = 0; d < n2; ++d) {
        auto [cl, ql] = by_lhs[d];
        auto [cr, qr] = by_rhs[d];
        if (cl < 0 && cr < 0) continue;
        if (cl < 0) { uf.set_zero(cr); continue; }
        if (cr < 0) { uf.set_zero(cl); continue; }
        // ql R_cl = qr R_cr
        uf.relate(cl, cr, qr / ql);
    }

    LinearStage st;
    st.H = &h;
    st.ncoords = n2;
    st.comp.assign(n2, -1);
    st.ratio.assign(n2, CycNum::zero(h.order));
    std::map<int, int> root_to_comp;
    for (int c = 0; c < n2; ++c) {
        if (uf.is_zero(c)) continue;
        auto [r, w] = uf.find(c);
        auto it = root_to_comp.find(r);
        int id;
        if (it == root_to_comp.end()) {
            id = (int)st.rep.size();
            root_to_comp.emplace(r, id);
            st.rep.push_back(c); // first coordinate met becomes representative
        } else {
            id = it->second;
        }
        st.comp[c] = id;
        st.ratio[c] = w;
    }
    // normalize ratios so the representative itself carries ratio 1
    std::vector<CycNum> repw(st.rep.size());
    for (size_t k = 0; k < st.rep.size(); ++k)
        repw[k] = st.ratio[st.rep[k]];
    for (int c = 0; c < n2; ++c)
        if (st.comp[c] >= 0)
            st.ratio[c] = st.ratio[c] / repw[st.comp[c]];

    // On the Z_2n x Z_2 shape the surviving support must sit inside the
    // S/T block pattern.
    if (k8n_shape(h.data)) {
        STPartition p = st_partition(h.data);
        std::vector<char> fixed(gs, 0);
        for (int s : p.fixed)
            fixed[s] = 1;
        for (int u = 0; u < dim; ++u)
            for (int v = 0; v < dim; ++v) {
                if (st.comp[u * dim + v] < 0) continue;
                bool ok = true;
                if (deg(u) == 1 && deg(v) == 0) ok = fixed[gamma(u)];
                if (deg(u) == 0 && deg(v) == 1) ok = fixed[gamma(v)];
                if (deg(u) == 1 && deg(v) == 1) ok = fixed[gamma(u)] == fixed[gamma(v)];
                if (!ok)
                    throw HqtError("linear stage support escapes the S/T block pattern");
            }
    }
    return st;
}

namespace {

struct QuadTerm {
    CycNum coef;
    int ca, cb; // component ids
};

struct OracleEq {
    CycNum lin;   // coefficient of the linear side
    int lc = -1;  // its component, -1 when absent
    std::vector<QuadTerm> quad;
};

// the two braiding identities, coordinate by coordinate, expressed over the
// linear-stage components
std::vector<OracleEq> build_equations(const HopfAlgebra& h, const LinearStage& st) {
    int dim = h.dim;
    struct Build {
        CycNum lin;
        int lc = -1;
        std::map<std::pair<int, int>, CycNum> quad;
    };
    std::map<size_t, Build> eqs;

    auto live = [&](int u, int v) { return st.comp[u * dim + v] >= 0; };
    auto comp_of = [&](int u, int v) { return st.comp[u * dim + v]; };
    auto ratio_of = [&](int u, int v) { return st.ratio[u * dim + v]; };

    auto add_lin = [&](size_t t, int c, const CycNum& coeff) {
        Build& b = eqs[t];
        if (b.lc >= 0)
            throw HqtError("duplicate linear term in a braiding coordinate");
        b.lc = c;
        b.lin = coeff;
    };
    auto add_quad = [&](size_t t, int ca, int cb, const CycNum& coeff) {
        Build& b = eqs[t];
        auto key = std::minmax(ca, cb);
        auto [it, fresh] = b.quad.emplace(std::make_pair(key.first, key.second), coeff);
        if (!fresh) it->second += coeff;
    };

    std::vector<std::pair<int, int>> livec;
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
            if (live(u, v)) livec.push_back({u, v});

    // (Delta (x) id)R = R13 R23
    for (auto [u, v] : livec) {
        for (const auto& term : h.comult[u])
            add_lin(((size_t)term.i * dim + term.j) * dim + v, comp_of(u, v),
                    term.coeff * ratio_of(u, v));
    }
    for (auto [u1, v1] : livec)
        for (auto [u2, v2] : livec) {
            const auto& m = h.mul(v1, v2);
            if (m.idx < 0) continue;
            add_quad(((size_t)u1 * dim + u2) * dim + m.idx, comp_of(u1, v1), comp_of(u2, v2),
                     m.coeff * ratio_of(u1, v1) * ratio_of(u2, v2));
        }

    // (id (x) Delta)R = R13 R12, shifted into the second half of the key space
    size_t off = (size_t)dim * dim * dim;
    for (auto [u, v] : livec) {
        for (const auto& term : h.comult[v])
            add_lin(off + ((size_t)u * dim + term.i) * dim + term.j, comp_of(u, v),
                    term.coeff * ratio_of(u, v));
    }
    for (auto [u1, v1] : livec)
        for (auto [u2, v2] : livec) {
            const auto& m = h.mul(u1, u2);
            if (m.idx < 0) continue;
            add_quad(off + ((size_t)m.idx * dim + v2) * dim + v1, comp_of(u1, v1), comp_of(u2, v2),
                     m.coeff * ratio_of(u1, v1) * ratio_of(u2, v2));
        }

    std::vector<OracleEq> out;
    out.reserve(eqs.size());
    for (auto& [key, b] : eqs) {
        OracleEq e;
        e.lc = b.lc;
        e.lin = b.lin;
        for (auto& [pr, coef] : b.quad)
            if (!coef.is_zero())
                e.quad.push_back({coef, pr.first, pr.second});
        if (e.lc < 0 && e.quad.empty()) continue;
        out.push_back(std::move(e));
    }
    return out;
}

enum class St : char { Unknown, Zero, Unit };

struct Propagation {
    bool contradiction = false;
    bool changed = false;
    std::pair<int, int> disjunction{-1, -1}; // 0 = x_a x_b with both unknown
    int tie_var = -1;                        // fallback branching variable
    bool nonbinomial = false;
};

Propagation propagate(const std::vector<OracleEq>& eqs, std::vector<St>& st) {
    Propagation out;
    bool moved = true;
    while (moved && !out.contradiction) {
        moved = false;
        out.disjunction = {-1, -1};
        out.tie_var = -1;
        out.nonbinomial = false;
        for (const auto& e : eqs) {
            St lin = e.lc >= 0 ? st[e.lc] : St::Zero; // absent linear side reads as zero
            int live_terms = 0;
            int unknown_factor = -1, unknown_pair_a = -1, unknown_pair_b = -1;
            bool some_unit_term = false;
            bool some_unknown_term = false;
            for (const auto& q : e.quad) {
                if (st[q.ca] == St::Zero || st[q.cb] == St::Zero) continue;
                ++live_terms;
                if (st[q.ca] == St::Unit && st[q.cb] == St::Unit) {
                    some_unit_term = true;
                } else {
                    some_unknown_term = true;
                    if (st[q.ca] == St::Unknown && st[q.cb] == St::Unknown) {
                        unknown_pair_a = q.ca;
                        unknown_pair_b = q.cb;
                    } else {
                        unknown_factor = st[q.ca] == St::Unknown ? q.ca : q.cb;
                    }
                }
            }
            if (live_terms == 0) {
                // 0 on the right: the linear side must vanish
                if (lin == St::Unit) { out.contradiction = true; break; }
                if (lin == St::Unknown) { st[e.lc] = St::Zero; moved = true; }
                continue;
            }
            if (live_terms == 1) {
                if (lin == St::Zero) {
                    if (some_unit_term) { out.contradiction = true; break; }
                    if (unknown_factor >= 0) { st[unknown_factor] = St::Zero; moved = true; continue; }
                    if (unknown_pair_a >= 0) { out.disjunction = {unknown_pair_a, unknown_pair_b}; continue; }
                }
                if (lin == St::Unit) {
                    // a unit equals a single product: both factors are units
                    for (const auto& q : e.quad) {
                        if (st[q.ca] == St::Zero || st[q.cb] == St::Zero) continue;
                        if (st[q.ca] == St::Unknown) { st[q.ca] = St::Unit; moved = true; }
                        if (st[q.cb] == St::Unknown) { st[q.cb] = St::Unit; moved = true; }
                    }
                    continue;
                }
                if (lin == St::Unknown) {
                    if (some_unit_term) { st[e.lc] = St::Unit; moved = true; continue; }
                    out.tie_var = out.tie_var < 0 ? e.lc : out.tie_var;
                    continue;
                }
            }
            if (live_terms >= 2) {
                if (!some_unknown_term && lin != St::Unknown) {
                    // fully decided; leaf handling classifies it
                    if (lin == St::Unit || e.lc < 0 || lin == St::Zero) {
                        if (live_terms >= 2 && lin == St::Unit) out.nonbinomial = true;
                        continue;
                    }
                }
                int var = unknown_pair_a >= 0 ? unknown_pair_a : unknown_factor;
                if (var < 0 && lin == St::Unknown) var = e.lc;
                if (var >= 0 && out.tie_var < 0) out.tie_var = var;
            }
        }
    }
    return out;
}

// one congruence row: sum exps[i] * y_i = rhs (mod M) over unit components
struct Row {
    std::vector<long> e;
    long rhs;
};

// Solves the congruence system by integer row reduction mod M and
// enumerates every solution vector (exponents of zeta_M per unit variable).
// Returns false when a free column or overflow makes full enumeration
// impossible; count_cap bounds the expansion.
bool solve_congruences(std::vector<Row> rows, int nvars, int M, long count_cap,
                       std::vector<std::vector<long>>& out, bool& capped) {
    auto norm = [&](long x) { return ((x % M) + M) % M; };
    for (auto& r : rows) {
        for (auto& x : r.e)
            x = norm(x);
        r.rhs = norm(r.rhs);
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.e, a.rhs) < std::tie(b.e, b.rhs);
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const Row& a, const Row& b) { return a.e == b.e && a.rhs == b.rhs; }),
               rows.end());

    std::vector<Row> pivots;     // echelon rows, one per pivot column
    std::vector<int> pivot_col;
    size_t cursor = 0;
    std::vector<Row> pool = std::move(rows);
    for (int col = 0; col < nvars; ++col) {
        // gather rows with a nonzero entry in this column
        std::vector<size_t> hot;
        for (size_t i = cursor; i < pool.size(); ++i)
            if (pool[i].e[col] != 0) hot.push_back(i);
        if (hot.empty()) continue;
        // pairwise euclid steps until a single row carries the column
        while (hot.size() > 1) {
            size_t ia = hot[hot.size() - 2], ib = hot[hot.size() - 1];
            long a = pool[ia].e[col], b = pool[ib].e[col];
            if (a == 0) { hot.erase(hot.end() - 2); continue; }
            if (b == 0) { hot.pop_back(); continue; }
            long q = b / a;
            for (int j = 0; j < nvars; ++j)
                pool[ib].e[j] = norm(pool[ib].e[j] - q * pool[ia].e[j]);
            pool[ib].rhs = norm(pool[ib].rhs - q * pool[ia].rhs);
            if (pool[ib].e[col] == 0)
                hot.pop_back();
            else
                std::swap(hot[hot.size() - 2], hot[hot.size() - 1]);
        }
        size_t ip = hot.front();
        std::swap(pool[ip], pool[cursor]);
        pivots.push_back(pool[cursor]);
        pivot_col.push_back(col);
        // clear the column from every other row
        for (size_t i = cursor + 1; i < pool.size(); ++i) {
            if (pool[i].e[col] == 0) continue;
            long g = std::gcd(pivots.back().e[col], (long)M);
            if (pool[i].e[col] % g != 0) {
                // combine once more to shrink; fall back to appending the row
                long a = pivots.back().e[col];
                long x = pool[i].e[col];
                while (x % g != 0) { x = norm(x - a); }
                (void)x;
            }
            long q = pool[i].e[col] / pivots.back().e[col];
            if (pivots.back().e[col] * q == pool[i].e[col]) {
                for (int j = 0; j < nvars; ++j)
                    pool[i].e[j] = norm(pool[i].e[j] - q * pivots.back().e[j]);
                pool[i].rhs = norm(pool[i].rhs - q * pivots.back().rhs);
            }
        }
        ++cursor;
    }
    // rows past the pivots must now reduce to 0 = 0 against the pivot set;
    // re-reduce each remaining row fully (top-down) and test consistency
    for (size_t i = cursor; i < pool.size(); ++i) {
        Row r = pool[i];
        for (size_t p = 0; p < pivots.size(); ++p) {
            int col = pivot_col[p];
            if (r.e[col] == 0) continue;
            long a = pivots[p].e[col];
            long g = std::gcd(a, (long)M);
            if (r.e[col] % std::gcd(g, (long)M) != 0 && r.e[col] % a != 0) continue;
            if (r.e[col] % a == 0) {
                long q = r.e[col] / a;
                for (int j = 0; j < nvars; ++j)
                    r.e[j] = norm(r.e[j] - q * pivots[p].e[j]);
                r.rhs = norm(r.rhs - q * pivots[p].rhs);
            }
        }
        bool all_zero = true;
        for (long x : r.e)
            if (x != 0) { all_zero = false; break; }
        if (all_zero && r.rhs != 0) return true; // inconsistent: no solutions, exhaustively known
        if (!all_zero) {
            // leftover constraint that did not reduce: treat as unsolved
            capped = true;
            return false;
        }
    }

    // back-substitution over the pivot rows, free columns enumerate all of Z/M
    std::vector<int> col_pivot(nvars, -1);
    for (size_t p = 0; p < pivots.size(); ++p)
        col_pivot[pivot_col[p]] = (int)p;

    std::vector<std::vector<long>> partial{std::vector<long>(nvars, -1)};
    for (int col = nvars - 1; col >= 0; --col) {
        std::vector<std::vector<long>> next;
        for (const auto& sol : partial) {
            if (col_pivot[col] < 0) {
                // free variable
                for (long v = 0; v < M; ++v) {
                    auto s = sol;
                    s[col] = v;
                    next.push_back(std::move(s));
                    if ((long)next.size() > count_cap) { capped = true; return false; }
                }
                continue;
            }
            const Row& r = pivots[col_pivot[col]];
            long tail = r.rhs;
            for (int j = col + 1; j < nvars; ++j)
                tail = ((tail - r.e[j] * sol[j]) % M + M) % M;
            long a = r.e[col];
            long g = std::gcd(a, (long)M);
            if (tail % g != 0) continue; // no solution along this partial assignment
            long m2 = M / g, a2 = a / g, t2 = tail / g;
            // inverse of a2 mod m2
            long inv = 1;
            for (long k = 0; k < m2; ++k)
                if ((a2 * k) % m2 == 1) { inv = k; break; }
            long base = (t2 % m2) * inv % m2;
            for (long t = 0; t < g; ++t) {
                auto s = sol;
                s[col] = (base + t * m2) % M;
                next.push_back(std::move(s));
                if ((long)next.size() > count_cap) { capped = true; return false; }
            }
        }
        partial = std::move(next);
        if (col_pivot[col] < 0 && !partial.empty()) {
            // a genuinely free multiplicative direction: flag as inexhaustive
            capped = true;
        }
    }
    out = std::move(partial);
    return true;
}

ExtensionData descend_data(const ExtensionData& d, int M) {
    ExtensionData out;
    out.group = d.group;
    out.action = d.action;
    out.ambient_order = M;
    for (const auto& v : d.sigma) {
        auto w = descend(v, M);
        if (!w)
            throw AmbientFieldTooSmall("sigma value outside Q(zeta_" + std::to_string(M) + ")");
        out.sigma.push_back(*w);
    }
    for (const auto& v : d.tau) {
        auto w = descend(v, M);
        if (!w)
            throw AmbientFieldTooSmall("tau value outside Q(zeta_" + std::to_string(M) + ")");
        out.tau.push_back(*w);
    }
    return out;
}

} // namespace

int oracle_dim_cap() {
    if (const char* env = std::getenv("HQT_DIM_CAP"))
        return std::atoi(env);
    return 16;
}

OracleResult solve_all(const HopfAlgebra& h, int ambient_order, Exec policy) {
    OracleResult result;
    int M = ambient_order ? ambient_order : h.order;
    result.ambient_order = M;

    int cap = oracle_dim_cap();
    bool allowed = h.dim <= cap;
    if (!allowed && h.dim == 18 && !obstruction_check(h.data).possible)
        allowed = true; // group-like branch only; still tractable
    if (!allowed)
        throw UnsupportedFamily("dimension " + std::to_string(h.dim) + " is above the solver cap " +
                                std::to_string(cap));

    // rebuild at the requested coefficient field when needed
    HopfAlgebra local;
    const HopfAlgebra* work = &h;
    if (M != h.order) {
        local = build_hopf(descend_data(h.data, M));
        work = &local;
    }

    LinearStage st = solve_linear_stage(*work);
    std::vector<OracleEq> eqs = build_equations(*work, st);
    int nc = st.param_count();

    // torsion exponents of every coefficient must exist for the lattice step
    bool torsion_ok = true;

    std::vector<std::vector<CycNum>> assignments; // values per component
    long node_cap = 200000, leaf_candidate_cap = 8192;
    bool exhaustive = true;

    std::vector<std::vector<St>> stack{std::vector<St>(nc, St::Unknown)};
    while (!stack.empty()) {
        if (++result.branches > node_cap) {
            exhaustive = false;
            result.notes.push_back("branch budget exceeded");
            break;
        }
        std::vector<St> state = std::move(stack.back());
        stack.pop_back();
        Propagation p = propagate(eqs, state);
        if (p.contradiction) continue;
        if (p.disjunction.first >= 0) {
            auto z = state, u = state;
            z[p.disjunction.first] = St::Zero;
            u[p.disjunction.first] = St::Unit;
            stack.push_back(std::move(z));
            stack.push_back(std::move(u));
            continue;
        }
        if (p.tie_var >= 0) {
            auto z = state, u = state;
            z[p.tie_var] = St::Zero;
            u[p.tie_var] = St::Unit;
            stack.push_back(std::move(z));
            stack.push_back(std::move(u));
            continue;
        }

        // leaf: all components are decided
        std::vector<int> unit_ids;
        std::vector<int> var_of(nc, -1);
        for (int c = 0; c < nc; ++c)
            if (state[c] == St::Unit) {
                var_of[c] = (int)unit_ids.size();
                unit_ids.push_back(c);
            }
        int k = (int)unit_ids.size();
        std::vector<Row> rows;
        bool leaf_ok = true;
        for (const auto& e : eqs) {
            bool lin_unit = e.lc >= 0 && state[e.lc] == St::Unit;
            std::vector<const QuadTerm*> live;
            for (const auto& q : e.quad)
                if (state[q.ca] == St::Unit && state[q.cb] == St::Unit) live.push_back(&q);
            if (!lin_unit && live.empty()) continue;
            if (lin_unit && live.size() == 1) {
                // lin * X_lc = coef * X_ca * X_cb
                Row r;
                r.e.assign(k, 0);
                r.e[var_of[e.lc]] += 1;
                r.e[var_of[live[0]->ca]] -= 1;
                r.e[var_of[live[0]->cb]] -= 1;
                CycNum rhs = live[0]->coef / e.lin;
                auto ex = rhs.torsion_exponent();
                if (!ex) { torsion_ok = false; leaf_ok = false; break; }
                r.rhs = *ex;
                rows.push_back(std::move(r));
            } else if (!lin_unit && live.size() == 2) {
                // 0 = c1 Xa Xb + c2 Xc Xd
                Row r;
                r.e.assign(k, 0);
                r.e[var_of[live[0]->ca]] += 1;
                r.e[var_of[live[0]->cb]] += 1;
                r.e[var_of[live[1]->ca]] -= 1;
                r.e[var_of[live[1]->cb]] -= 1;
                CycNum rhs = -(live[1]->coef) / live[0]->coef;
                auto ex = rhs.torsion_exponent();
                if (!ex) { torsion_ok = false; leaf_ok = false; break; }
                r.rhs = *ex;
                rows.push_back(std::move(r));
            } else if (!lin_unit && live.size() == 1) {
                leaf_ok = false; // 0 = unit product: dead leaf
                break;
            } else {
                exhaustive = false;
                result.notes.push_back("a braiding constraint did not reduce to binomial form");
                leaf_ok = false;
                break;
            }
        }
        if (!leaf_ok) continue;

        std::vector<std::vector<long>> sols;
        bool capped = false;
        if (!solve_congruences(std::move(rows), k, M, leaf_candidate_cap, sols, capped)) {
            exhaustive = false;
            result.notes.push_back("congruence stage could not enumerate a leaf exhaustively");
            continue;
        }
        if (capped) exhaustive = false;
        for (const auto& sol : sols) {
            std::vector<CycNum> vals(nc, CycNum::zero(M));
            for (int c = 0; c < nc; ++c)
                if (state[c] == St::Unit) vals[c] = CycNum::root(M, sol[var_of[c]]);
            assignments.push_back(std::move(vals));
        }
    }
    if (!torsion_ok) {
        exhaustive = false;
        result.notes.push_back("a coefficient was not a root of unity; lattice step skipped it");
    }

    // materialize, dedup, then filter by full verification
    std::vector<RMatrix> candidates;
    {
        std::set<std::string> seen;
        for (const auto& vals : assignments) {
            TensorElement t = TensorElement::zero(*work);
            for (int c = 0; c < st.ncoords; ++c)
                if (st.comp[c] >= 0)
                    t.c[c] = st.ratio[c] * vals[st.comp[c]];
            RMatrix r = RMatrix::from_tensor(t);
            std::string key;
            for (const auto& x : t.c)
                key += x.key() + "|";
            if (seen.insert(key).second) candidates.push_back(std::move(r));
        }
    }
    result.candidates = (long)candidates.size();

    std::vector<char> ok(candidates.size(), 0);
    parallel_for(policy, (long)candidates.size(), [&](long i) {
        ok[i] = verify_quasitriangular(*work, candidates[i], Exec::Serial).ok ? 1 : 0;
    });

    std::vector<RMatrix> verified;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (ok[i]) verified.push_back(std::move(candidates[i]));

    // every verified solution must have an all-or-nothing block of
    // coefficients on moved x moved pairs (the case split this solver
    // branched on); anything else signals a solver bug
    {
        STPartition p = st_partition(work->data);
        for (const auto& r : verified) {
            int zero_ct = 0, total = 0;
            for (int t1 : p.moved)
                for (int t2 : p.moved) {
                    ++total;
                    if (r.blk(4, t1, t2).is_zero()) ++zero_ct;
                }
            if (zero_ct != 0 && zero_ct != total)
                throw HqtError("verified solution with a mixed moved-block support pattern");
        }
    }

    if (work != &h) {
        for (auto& r : verified)
            r = change_ambient(r, h);
    }
    canonical_sort(verified);
    result.solutions = std::move(verified);
    result.exhaustive = exhaustive;
    return result;
}

DiffReport compare(const OracleResult& oracle, const std::vector<RMatrix>& constructed) {
    DiffReport diff;
    std::vector<RMatrix> a = oracle.solutions, b = constructed;
    canonical_sort(a);
    canonical_sort(b);
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i == a.size()) { diff.only_in_constructed.push_back(b[j++]); continue; }
        if (j == b.size()) { diff.only_in_solver.push_back(a[i++]); continue; }
        int c = RMatrix::compare(a[i], b[j]);
        if (c == 0) { ++i; ++j; }
        else if (c < 0) diff.only_in_solver.push_back(a[i++]);
        else diff.only_in_constructed.push_back(b[j++]);
    }
    return diff;
}

} // namespace hqt
