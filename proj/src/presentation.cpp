#include "qcenter/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "qcenter/errors.hpp"

namespace qcenter {

namespace {

PsiElement make_element(LieType t, const Weight& w) { return {w, inner_product(t, w, w)}; }

Weight weight_from_coords(int n, std::initializer_list<std::pair<int, Int>> terms) {
    Weight w(n, 0);
    for (auto [idx, c] : terms) w[idx - 1] += c;
    return w;
}

Presentation polynomial_presentation(LieType t) {
    Presentation p;
    p.lie_type = t;
    p.is_polynomial = true;
    for (int i = 1; i <= t.rank; ++i)
        p.generators.push_back({"t_" + std::to_string(i), make_element(t, fundamental_weight(t, i))});
    return p;
}

Presentation d_odd_presentation(LieType t) {
    int n = t.rank;
    Presentation p;
    p.lie_type = t;
    for (int i = 1; i <= n - 2; ++i)
        p.generators.push_back({"t_" + std::to_string(i), make_element(t, fundamental_weight(t, i))});
    p.generators.push_back({"t_" + std::to_string(n - 1),
                            make_element(t, weight_from_coords(n, {{n - 1, 2}}))});
    p.generators.push_back({"t_" + std::to_string(n), make_element(t, weight_from_coords(n, {{n, 2}}))});
    p.generators.push_back({"t_" + std::to_string(n + 1),
                            make_element(t, weight_from_coords(n, {{n - 1, 1}, {n, 1}}))});
    BinomialRelation rel;
    rel.lhs["t_" + std::to_string(n - 1)] = 1;
    rel.lhs["t_" + std::to_string(n)] = 1;
    rel.rhs["t_" + std::to_string(n + 1)] = 2;
    p.relations.push_back(std::move(rel));
    for (int i = 1; i <= n; ++i) p.inverted_generators.push_back("t_" + std::to_string(i));
    return p;
}

Presentation e6_presentation(LieType t) {
    Presentation p;
    p.lie_type = t;
    const std::vector<Weight> weights = {
        {3, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 3, 0}, {0, 0, 0, 0, 0, 3}, {1, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 1},
        {0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 2, 0}, {2, 0, 0, 0, 1, 0},
        {0, 0, 1, 0, 0, 2}, {0, 0, 2, 0, 0, 1}};
    for (int i = 0; i < 14; ++i)
        p.generators.push_back({"t_" + std::to_string(i + 1), make_element(t, weights[i])});
    auto rel = [&](std::initializer_list<std::pair<int, Int>> lhs,
                   std::initializer_list<std::pair<int, Int>> rhs) {
        BinomialRelation r;
        for (auto [i, e] : lhs) r.lhs["t_" + std::to_string(i)] = e;
        for (auto [i, e] : rhs) r.rhs["t_" + std::to_string(i)] = e;
        p.relations.push_back(std::move(r));
    };
    rel({{1, 1}, {3, 1}}, {{7, 3}});
    rel({{1, 1}, {6, 1}}, {{8, 3}});
    rel({{3, 1}, {5, 1}}, {{9, 3}});
    rel({{8, 1}, {9, 1}}, {{7, 1}, {10, 1}});
    rel({{7, 1}, {9, 2}}, {{3, 1}, {11, 1}});
    rel({{7, 2}, {9, 1}}, {{3, 1}, {12, 1}});
    rel({{7, 1}, {8, 2}}, {{1, 1}, {13, 1}});
    rel({{7, 2}, {8, 1}}, {{1, 1}, {14, 1}});
    for (int i = 1; i <= 6; ++i) p.inverted_generators.push_back("t_" + std::to_string(i));
    return p;
}

Presentation a_presentation(LieType t) {
    int n = t.rank;
    Int r = type_a_modulus(n);
    Presentation p;
    p.lie_type = t;
    auto seqs = minimal_sequences_A(n);
    std::vector<std::string> names;
    int ordinary = 0;
    for (const auto& [seq, cls] : seqs) {
        std::string name;
        switch (cls.tag) {
            case GenClassTag::Single: name = "x_" + std::to_string(cls.index); break;
            case GenClassTag::Special: name = "y_" + std::to_string(cls.index); break;
            case GenClassTag::Ordinary: name = "w_" + std::to_string(++ordinary); break;
        }
        p.generators.push_back({name, make_element(t, seq.entries)});
        names.push_back(p.generators.back().name);
    }
    for (size_t g = 0; g < seqs.size(); ++g) {
        const auto& [seq, cls] = seqs[g];
        if (cls.tag == GenClassTag::Special) {
            Int k = cls.index;
            BinomialRelation rel;
            rel.lhs[names[g]] = type_a_single_multiplier(n, (int)k);
            Int x1_exp = cls.coeff / std::gcd(r, k);
            if (x1_exp) rel.rhs["x_1"] = x1_exp;
            rel.rhs["x_" + std::to_string(k)] += 1;
            p.relations.push_back(std::move(rel));
        } else if (cls.tag == GenClassTag::Ordinary) {
            BinomialRelation rel;
            Int norm = norm_coefficient(n, seq);
            rel.lhs["x_1"] = norm;
            rel.lhs[names[g]] += 1;
            for (int k = 2; k <= n; ++k) {
                if ((Int)k == r || seq.entries[k - 1] == 0) continue;
                rel.rhs["y_" + std::to_string(k)] = seq.entries[k - 1];
            }
            p.relations.push_back(std::move(rel));
        }
    }
    // Every relation's mixed side is a power of x_1 times one generator, so
    // saturating at x_1 alone already realizes the localization step.
    p.inverted_generators.push_back("x_1");
    return p;
}

} // namespace

bool classify_polynomial(LieType t) {
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible Lie type " + t.str());
    switch (t.family) {
        case 'A': return t.rank == 1;
        case 'B':
        case 'C': return true;
        case 'D': return t.rank % 2 == 0;
        case 'E': return t.rank != 6;
        default: return true; // F_4, G_2
    }
}

Presentation build_presentation(LieType t) {
    Presentation p;
    if (classify_polynomial(t)) p = polynomial_presentation(t);
    else if (t.family == 'D') p = d_odd_presentation(t);
    else if (t.family == 'E') p = e6_presentation(t);
    else p = a_presentation(t);
    p.completeness_bound = default_completeness_bound(t);
    return p;
}

bool verify_soundness(const Presentation& p) {
    int n = p.lie_type.rank;
    std::map<std::string, const Weight*> by_name;
    for (const auto& g : p.generators) by_name[g.name] = &g.element.weight;
    for (const auto& rel : p.relations) {
        if (rel.lhs == rel.rhs) return false;
        Weight l(n, 0), r(n, 0);
        for (auto side : {std::make_pair(&rel.lhs, &l), std::make_pair(&rel.rhs, &r)}) {
            for (const auto& [name, exp] : *side.first) {
                auto it = by_name.find(name);
                if (it == by_name.end() || exp < 0) return false;
                for (int j = 0; j < n; ++j) (*side.second)[j] += exp * (*it->second)[j];
            }
        }
        if (l != r) return false;
    }
    return true;
}

Int default_completeness_bound(LieType t) {
    return t.family == 'A' && t.rank >= 2 ? 4 * type_a_modulus(t.rank) : 8;
}

namespace {

// All monoid elements up to the family-specific degree bound.
std::vector<Weight> bounded_elements(LieType t, Int bound, Int budget) {
    int n = t.rank;
    std::vector<Weight> out;
    Weight cur(n, 0);
    long long visited = 0;
    if (t.family == 'A' && n >= 2) {
        Int r = type_a_modulus(n);
        std::function<void(int, Int)> rec = [&](int i, Int deg) {
            if (++visited > budget) throw BudgetError("bounded element enumeration", visited);
            if (i == n) {
                if (deg > 0 && deg % r == 0) out.push_back(cur);
                return;
            }
            for (Int v = 0; deg + (Int)(i + 1) * v <= bound; ++v) {
                cur[i] = v;
                rec(i + 1, deg + (Int)(i + 1) * v);
            }
            cur[i] = 0;
        };
        rec(0, 0);
    } else {
        IntegerLattice q = root_lattice(t);
        std::function<void(int, Int)> rec = [&](int i, Int sum) {
            if (++visited > budget) throw BudgetError("bounded element enumeration", visited);
            if (i == n) {
                if (sum == 0) return;
                Weight dw(n);
                for (int j = 0; j < n; ++j) dw[j] = 2 * cur[j];
                if (lattice_contains(q, dw)) out.push_back(cur);
                return;
            }
            for (Int v = 0; sum + v <= bound; ++v) {
                cur[i] = v;
                rec(i + 1, sum + v);
            }
            cur[i] = 0;
        };
        rec(0, 0);
    }
    return out;
}

// Every exponent vector e with sum_g e_g * weight(g) = target.
std::vector<std::vector<Int>> factorizations(const std::vector<MonoidGenerator>& gens,
                                             const Weight& target) {
    int n = (int)target.size(), m = (int)gens.size();
    std::vector<std::vector<Int>> found;
    std::vector<Int> exps(m, 0);
    Weight rem = target;
    std::function<void(int)> rec = [&](int g) {
        bool zero = std::all_of(rem.begin(), rem.end(), [](Int v) { return v == 0; });
        if (zero) {
            found.push_back(exps);
            return;
        }
        if (g == m) return;
        const Weight& w = gens[g].element.weight;
        Int max_e = -1;
        for (int j = 0; j < n; ++j)
            if (w[j] > 0) {
                Int q = rem[j] / w[j];
                if (max_e < 0 || q < max_e) max_e = q;
            }
        for (Int e = 0; e <= max_e; ++e) {
            if (e > 0)
                for (int j = 0; j < n; ++j) rem[j] -= w[j];
            exps[g] = e;
            rec(g + 1);
        }
        for (int j = 0; j < n; ++j) rem[j] += max_e * w[j];
        exps[g] = 0;
    };
    rec(0);
    return found;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Connected components of a fiber under single-relation rewrites; returns
// the component id of each factorization.
std::vector<int> markov_components(const Presentation& p,
                                   const std::vector<std::vector<Int>>& facts) {
    std::map<std::vector<Int>, int> index;
    for (int i = 0; i < (int)facts.size(); ++i) index[facts[i]] = i;
    int m = (int)p.generators.size();
    std::map<std::string, int> gen_index;
    for (int g = 0; g < m; ++g) gen_index[p.generators[g].name] = g;

    auto as_vector = [&](const std::map<std::string, Int>& side) {
        std::vector<Int> v(m, 0);
        for (const auto& [name, e] : side) v[gen_index.at(name)] = e;
        return v;
    };
    UnionFind uf((int)facts.size());
    for (const auto& rel : p.relations) {
        std::vector<Int> from = as_vector(rel.lhs), to = as_vector(rel.rhs);
        for (int dir = 0; dir < 2; ++dir) {
            for (int i = 0; i < (int)facts.size(); ++i) {
                std::vector<Int> image = facts[i];
                bool fits = true;
                for (int g = 0; g < m && fits; ++g) {
                    image[g] += to[g] - from[g];
                    if (image[g] < 0) fits = false;
                }
                if (!fits) continue;
                auto it = index.find(image);
                if (it != index.end()) uf.unite(i, it->second);
            }
            std::swap(from, to);
        }
    }
    std::vector<int> roots((int)facts.size());
    for (int i = 0; i < (int)facts.size(); ++i) roots[i] = uf.find(i);
    return roots;
}

int distinct_count(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return (int)(std::unique(v.begin(), v.end()) - v.begin());
}

int count_classes(const Presentation& p, const Weight& psi) {
    auto facts = factorizations(p.generators, psi);
    if (facts.empty()) return 0;
    auto roots = markov_components(p, facts);
    int classes = distinct_count(roots);
    if (classes == 1 || p.inverted_generators.empty()) return classes;

    // Saturation rounds: multiply every factorization by k copies of each
    // inverted generator and re-test connectivity in the larger fiber.
    int m = (int)p.generators.size();
    std::map<std::string, int> gen_index;
    for (int g = 0; g < m; ++g) gen_index[p.generators[g].name] = g;
    std::vector<Int> delta_exp(m, 0);
    Weight delta_wt(p.lie_type.rank, 0);
    for (const auto& name : p.inverted_generators) {
        int g = gen_index.at(name);
        delta_exp[g] += 1;
        for (int j = 0; j < p.lie_type.rank; ++j)
            delta_wt[j] += p.generators[g].element.weight[j];
    }
    constexpr int kMaxRounds = 6;
    for (int k = 1; k <= kMaxRounds && classes > 1; ++k) {
        Weight target = psi;
        for (int j = 0; j < p.lie_type.rank; ++j) target[j] += k * delta_wt[j];
        auto big = factorizations(p.generators, target);
        auto big_roots = markov_components(p, big);
        std::map<std::vector<Int>, int> big_index;
        for (int i = 0; i < (int)big.size(); ++i) big_index[big[i]] = i;
        std::vector<int> embedded;
        for (const auto& f : facts) {
            std::vector<Int> g = f;
            for (int gi = 0; gi < m; ++gi) g[gi] += k * delta_exp[gi];
            embedded.push_back(big_roots[big_index.at(g)]);
        }
        classes = distinct_count(embedded);
    }
    return classes;
}

} // namespace

std::map<Weight, int> factorization_class_counts(const Presentation& p, Int degree_bound,
                                                 Int budget) {
    std::map<Weight, int> counts;
    for (const auto& psi : bounded_elements(p.lie_type, degree_bound, budget))
        counts[psi] = count_classes(p, psi);
    return counts;
}

bool verify_completeness(const Presentation& p, Int degree_bound, Int budget) {
    for (const auto& psi : bounded_elements(p.lie_type, degree_bound, budget))
        if (count_classes(p, psi) != 1) return false;
    return true;
}

} // namespace qcenter
