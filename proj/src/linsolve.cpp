#include "dkdv/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace dkdv {

LinearSolution solve_linear(const LinearSystem &sys) {
    LinearSolution out;
    // echelon rows keyed by pivot column; each stored row is normalized
    std::map<int, std::pair<std::map<int, GaussianRational>, GaussianRational>> echelon;
    for (size_t ri = 0; ri < sys.rows.size(); ++ri) {
        std::map<int, GaussianRational> row = sys.rows[ri];
        GaussianRational b = sys.rhs[ri];
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = echelon.find(lead);
            if (it == echelon.end()) {
                GaussianRational inv = GaussianRational(1) / row.begin()->second;
                for (auto &[c, v] : row) v *= inv;
                b *= inv;
                echelon.emplace(lead, std::make_pair(std::move(row), std::move(b)));
                row.clear();
                break;
            }
            GaussianRational f = row.begin()->second;
            for (const auto &[c, v] : it->second.first) {
                auto jt = row.find(c);
                GaussianRational delta = f * v;
                if (jt == row.end()) {
                    if (!delta.is_zero()) row.emplace(c, -delta);
                } else {
                    jt->second -= delta;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
            b -= f * it->second.second;
        }
        if (row.empty() && !b.is_zero()) {
            out.consistent = false;
            out.bad_row = static_cast<int>(ri);
            out.kernel_dim = sys.ncols - static_cast<int>(echelon.size());
            return out;
        }
    }
    out.consistent = true;
    out.kernel_dim = sys.ncols - static_cast<int>(echelon.size());
    out.x.assign(static_cast<size_t>(sys.ncols), GaussianRational(0));
    // back-substitution in decreasing pivot order; free variables stay 0
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        GaussianRational v = it->second.second;
        for (const auto &[c, a] : it->second.first)
            if (c != it->first) v -= a * out.x[static_cast<size_t>(c)];
        out.x[static_cast<size_t>(it->first)] = v;
    }
    return out;
}

namespace {

// non-increasing sequences of given length summing to s
void fixed_length_partitions(int s, int len, int maxpart, std::vector<int> &cur,
                             std::vector<std::vector<int>> &out) {
    if (len == 0) {
        if (s == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(s, maxpart); p >= 0; --p) {
        if (p * len < s) break;
        cur.push_back(p);
        fixed_length_partitions(s - p, len - 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> jet_multisets(int count, int sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    fixed_length_partitions(sum, count, sum, cur, out);
    return out;
}

} // namespace

DiffPoly anti_dx(const DiffPoly &p) {
    const RingPtr &ring = p.ring();
    int N = ring->size();
    // blocks keyed by (eps, per-variable exponent signature, jet weight)
    struct BlockKey {
        int eps;
        std::vector<int> sig;
        int weight;
        bool operator<(const BlockKey &o) const {
            return std::tie(eps, sig, weight) < std::tie(o.eps, o.sig, o.weight);
        }
    };
    std::map<BlockKey, std::vector<std::pair<Monomial, GaussianRational>>> blocks;
    for (const auto &[m, c] : p.terms()) {
        BlockKey key{m.eps, std::vector<int>(static_cast<size_t>(N), 0), m.jet_weight()};
        for (const auto &f : m.factors) key.sig[static_cast<size_t>(f.var)] += f.exp;
        blocks[std::move(key)].emplace_back(m, c);
    }

    DiffPoly q(ring, p.trunc());
    for (const auto &[key, terms] : blocks) {
        bool empty_sig = std::all_of(key.sig.begin(), key.sig.end(), [](int e) { return e == 0; });
        if (empty_sig || key.weight == 0)
            throw std::domain_error("anti_dx: input is not a total x-derivative (constant-type block)");

        // candidate monomials: same signature, jet weight one lower
        std::vector<Monomial> basis;
        int remaining = key.weight - 1;
        // distribute the weight across variables left to right
        struct State {
            Monomial m;
            int weight_used;
        };
        std::vector<State> states{{Monomial{}, 0}};
        for (int var = 0; var < N; ++var) {
            int cnt = key.sig[static_cast<size_t>(var)];
            if (cnt == 0) continue;
            std::vector<State> next;
            for (const auto &st : states) {
                int room = remaining - st.weight_used;
                for (int s = 0; s <= room; ++s) {
                    for (const auto &orders : jet_multisets(cnt, s)) {
                        Monomial m = st.m;
                        // orders are non-increasing; aggregate equal entries
                        for (size_t i = 0; i < orders.size();) {
                            size_t j = i;
                            while (j < orders.size() && orders[j] == orders[i]) ++j;
                            m.factors.push_back({var, orders[i], static_cast<int>(j - i)});
                            i = j;
                        }
                        next.push_back({std::move(m), st.weight_used + s});
                    }
                }
            }
            states = std::move(next);
        }
        for (auto &st : states) {
            if (st.weight_used != remaining) continue;
            std::sort(st.m.factors.begin(), st.m.factors.end(),
                      [](const JetFactor &a, const JetFactor &b) {
                          return a.var != b.var ? a.var < b.var : a.order < b.order;
                      });
            st.m.eps = key.eps;
            basis.push_back(std::move(st.m));
        }

        // assemble dx(basis_j) coefficient-wise
        std::map<Monomial, std::map<int, GaussianRational>, MonomialOrder> rows;
        for (size_t j = 0; j < basis.size(); ++j) {
            DiffPoly bj(ring, p.trunc());
            bj.add_term(basis[j], GaussianRational(1));
            for (const auto &[m, c] : dx(bj).terms()) rows[m][static_cast<int>(j)] = c;
        }
        for (const auto &[m, c] : terms) rows[m]; // ensure every target monomial has a row

        LinearSystem sys;
        sys.ncols = static_cast<int>(basis.size());
        std::map<Monomial, GaussianRational, MonomialOrder> rhs_map;
        for (const auto &[m, c] : terms) rhs_map.emplace(m, c);
        for (auto &[m, row] : rows) {
            auto it = rhs_map.find(m);
            sys.add_row(row, it == rhs_map.end() ? GaussianRational(0) : it->second);
        }
        LinearSolution sol = solve_linear(sys);
        if (!sol.consistent) throw std::domain_error("anti_dx: input is not a total x-derivative");
        if (sol.kernel_dim != 0)
            throw std::logic_error("anti_dx: unexpected kernel in dx restricted to a graded block");
        for (size_t j = 0; j < basis.size(); ++j)
            if (!sol.x[j].is_zero()) q.add_term(basis[j], sol.x[j]);
    }
    return q;
}

} // namespace dkdv
