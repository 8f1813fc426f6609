#include "deriva/groups.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace deriva {

GroupWord parse_word(const std::string &s) {
    GroupWord w;
    w.letters.reserve(s.size());
    for (char ch : s) {
        if (ch >= 'a' && ch <= 'z')
            w.letters.emplace_back(ch - 'a', 1);
        else if (ch >= 'A' && ch <= 'Z')
            w.letters.emplace_back(ch - 'A', -1);
        else
            throw WordSyntax(std::string("bad word character '") + ch + "'");
    }
    return w;
}

std::string word_to_string(const GroupWord &w) {
    std::string s;
    for (auto [gen, exp] : w.letters) {
        if (gen > 25)
            return "<word>";
        s += (char)((exp > 0 ? 'a' : 'A') + gen);
    }
    return s;
}

int evaluate_word(const FiniteGroup &g, const GroupWord &w) {
    int acc = g.identity();
    for (auto [gen, exp] : w.letters) {
        if (gen < 0 || gen >= (int)g.generators().size())
            throw WordSyntax("word uses generator index " + std::to_string(gen) +
                             " but the group has " + std::to_string(g.generators().size()) +
                             " generators");
        int x = g.generators()[(std::size_t)gen];
        acc = g.mul(acc, exp > 0 ? x : g.inv(x));
    }
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < n_; ++g)
        for (int h = g + 1; h < n_; ++h)
            if (mul(g, h) != mul(h, g))
                return false;
    return true;
}

void FiniteGroup::finish(bool full_assoc_check) {
    // identity
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n_ && ok; ++g)
            ok = mul(e, g) == g && mul(g, e) == g;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        throw NotAGroup("no identity element");

    inverse_.assign((std::size_t)n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                inverse_[(std::size_t)g] = h;
                break;
            }
        }
        if (inverse_[(std::size_t)g] < 0)
            throw NotAGroup("element " + std::to_string(g) + " has no inverse");
    }

    if (full_assoc_check) {
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h)
                for (int k = 0; k < n_; ++k)
                    if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                        throw NotAGroup("associativity fails at (" + std::to_string(g) + "," +
                                        std::to_string(h) + "," + std::to_string(k) + ")");
    } else {
        std::mt19937 rng(20240819u);
        std::uniform_int_distribution<int> pick(0, n_ - 1);
        for (long i = 0; i < 10l * n_ * n_; ++i) {
            int g = pick(rng), h = pick(rng), k = pick(rng);
            if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                throw NotAGroup("associativity fails at (" + std::to_string(g) + "," +
                                std::to_string(h) + "," + std::to_string(k) + ")");
        }
    }
}

void FiniteGroup::check_relators() const {
    for (const auto &rel : relators_)
        if (evaluate_word(*this, rel) != identity_)
            throw RelatorViolation("relator " + word_to_string(rel) +
                                   " does not evaluate to the identity");
}

void FiniteGroup::build_element_words() {
    element_words_.assign((std::size_t)n_, GroupWord{});
    if (cyclic_order_ > 0) {
        // normal form a^i b^j
        for (int g = 0; g < n_; ++g) {
            int i = g % cyclic_order_, j = g / cyclic_order_;
            GroupWord w;
            w.letters.assign((std::size_t)(i + j), {0, 1});
            for (int t = 0; t < j; ++t)
                w.letters[(std::size_t)(i + t)] = {1, 1};
            element_words_[(std::size_t)g] = std::move(w);
        }
        return;
    }
    std::vector<bool> seen((std::size_t)n_, false);
    std::vector<int> queue{identity_};
    seen[(std::size_t)identity_] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int g = queue[head];
        for (int t = 0; t < (int)generators_.size(); ++t) {
            int h = mul(g, generators_[(std::size_t)t]);
            if (seen[(std::size_t)h])
                continue;
            seen[(std::size_t)h] = true;
            element_words_[(std::size_t)h] = element_words_[(std::size_t)g];
            element_words_[(std::size_t)h].letters.emplace_back(t, 1);
            queue.push_back(h);
        }
    }
    if ((int)queue.size() != n_)
        throw NonGeneratingSet("declared generators generate only " +
                               std::to_string(queue.size()) + " of " + std::to_string(n_) +
                               " elements");
}

namespace {

std::string power_name(int i, int j) {
    if (i == 0 && j == 0)
        return "1";
    std::string s;
    if (i == 1)
        s = "a";
    else if (i > 1)
        s = "a^" + std::to_string(i);
    if (j == 1)
        s += "b";
    return s;
}

GroupWord repeated(int gen, int times) {
    GroupWord w;
    w.letters.assign((std::size_t)times, {gen, 1});
    return w;
}

}  // namespace

// shared scaffolding: order 2m with a of order m, b of order dividing 4
FiniteGroup FiniteGroup::make_family(int m, const std::vector<GroupWord> &relators,
                                     const std::function<int(int, int, int, int)> &mul_index) {
    FiniteGroup g;
    g.n_ = 2 * m;
    g.cyclic_order_ = m;
    g.cayley_.assign((std::size_t)g.n_ * g.n_, 0);
    for (int x = 0; x < g.n_; ++x)
        for (int y = 0; y < g.n_; ++y) {
            int i = x % m, j = x / m, k = y % m, l = y / m;
            g.cayley_[(std::size_t)x * g.n_ + y] = mul_index(i, j, k, l);
        }
    g.names_.reserve((std::size_t)g.n_);
    for (int x = 0; x < g.n_; ++x)
        g.names_.push_back(power_name(x % m, x / m));
    g.generators_ = {1, m};  // a, b
    g.relators_ = relators;
    g.finish(g.n_ <= 64);
    g.build_element_words();
    g.check_relators();
    return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 3)
        throw ParameterTooSmall("dihedral parameter must be at least 3, got " +
                                std::to_string(n));
    GroupWord r1 = repeated(0, n);
    GroupWord r2 = parse_word("bb");
    GroupWord r3 = parse_word("abab");
    return make_family(n, {r1, r2, r3}, [n](int i, int j, int k, int l) {
        int kk = j ? (n - k) % n : k;
        return (i + kk) % n + n * (j ^ l);
    });
}

FiniteGroup FiniteGroup::dicyclic(int n, bool allow_degenerate) {
    if (n < 1)
        throw ParameterTooSmall("dicyclic parameter must be at least 1, got " +
                                std::to_string(n));
    if (n < 2 && !allow_degenerate)
        throw ParameterTooSmall(
            "dicyclic parameter 1 yields a cyclic degenerate case; pass allow-degenerate");
    int m = 2 * n;
    GroupWord r1 = repeated(0, m);
    GroupWord r2 = repeated(0, n);
    r2.letters.emplace_back(1, 1);
    r2.letters.emplace_back(1, 1);
    GroupWord r3 = parse_word("aBab");
    return make_family(m, {r1, r2, r3}, [n, m](int i, int j, int k, int l) {
        int kk = j ? (m - k) % m : k;
        int extra = (j & l) ? n : 0;
        return (i + kk + extra) % m + m * (j ^ l);
    });
}

FiniteGroup FiniteGroup::semidihedral(int n) {
    if (n < 1)
        throw ParameterTooSmall("semidihedral parameter must be at least 1, got " +
                                std::to_string(n));
    int m = 4 * n;
    GroupWord r1 = repeated(0, m);
    GroupWord r2 = parse_word("bb");
    GroupWord r3 = repeated(0, 2 * n + 1);
    for (auto [gen, exp] : parse_word("bab").letters)
        r3.letters.emplace_back(gen, exp);
    long sigma = 2l * n - 1;
    return make_family(m, {r1, r2, r3}, [m, sigma](int i, int j, int k, int l) {
        long kk = j ? (k * sigma) % m : k;
        return (int)((i + kk) % m) + m * (j ^ l);
    });
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>> &table, std::vector<int> generators,
                        std::vector<GroupWord> relators) {
    int n = (int)table.size();
    if (n == 0)
        throw NotAGroup("empty multiplication table");
    FiniteGroup g;
    g.n_ = n;
    g.cayley_.reserve((std::size_t)n * n);
    for (const auto &row : table) {
        if ((int)row.size() != n)
            throw NotAGroup("multiplication table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw NotAGroup("table entry " + std::to_string(v) + " out of range");
            g.cayley_.push_back(v);
        }
    }
    for (int x : generators)
        if (x < 0 || x >= n)
            throw std::invalid_argument("generator index out of range");
    for (int x = 0; x < n; ++x)
        g.names_.push_back("g" + std::to_string(x));
    g.relators_ = std::move(relators);
    g.finish(n <= 64);  // identity/inverses needed before the generator fallback
    if (generators.empty()) {
        for (int x = 0; x < n; ++x)
            if (x != g.identity_)
                generators.push_back(x);
    }
    g.generators_ = std::move(generators);
    g.build_element_words();
    g.check_relators();
    return g;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup &g) {
    int n = g.order();
    std::vector<int> cls((std::size_t)n, -1);
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n; ++x) {
        if (cls[(std::size_t)x] >= 0)
            continue;
        int id = (int)raw.size();
        std::vector<int> orbit{x};
        cls[(std::size_t)x] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            int y = orbit[head];
            for (int t : g.generators()) {
                int z = g.mul(g.mul(g.inv(t), y), t);
                if (cls[(std::size_t)z] < 0) {
                    cls[(std::size_t)z] = id;
                    orbit.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }
    std::stable_sort(raw.begin(), raw.end(), [](const auto &a, const auto &b) {
        if ((a.size() == 1) != (b.size() == 1))
            return a.size() == 1;
        return a.front() < b.front();
    });
    ConjugacyClasses out;
    out.classes = std::move(raw);
    for (const auto &c : out.classes) {
        out.representatives.push_back(c.front());
        if (c.size() == 1)
            ++out.central_count;
    }
    return out;
}

std::vector<int> cyclic_part(const FiniteGroup &g, int elem) {
    std::vector<int> part;
    int x = g.identity();
    do {
        part.push_back(x);
        x = g.mul(x, elem);
    } while (x != g.identity());
    std::sort(part.begin(), part.end());
    return part;
}

}  // namespace deriva
