#include "densesum/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace densesum {

std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit == 0) throw invalid_input("sieve limit must be >= 1");
    PrimeTable table{limit, {}};
    if (limit < 2) return table;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) table.primes.push_back(i);
    return table;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t y = powmod_u64(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            y = mulmod_u64(y, y, x);
            if (y == x - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Balanced product tree over a span of 64-bit values, nodes stored only while
// their product stays below the modulus bit length: above that, the remainder
// pass leaves the modulus untouched, so those products are never needed.
class ModTree {
public:
    ModTree(std::span<const std::uint64_t> values, std::size_t threshold_bits)
        : values_(values), threshold_bits_(threshold_bits) {
        nodes_.reserve(values.size() * 2);
        root_ = build(0, values.size());
    }

    // hits[i] = (gcd(values[i], modulus mod values[i]) > 1)
    void mark_divisible(const bigint& modulus, std::vector<char>& hits) const {
        descend(root_, modulus, hits);
    }

private:
    struct Node {
        std::size_t lo, hi;
        std::ptrdiff_t left = -1, right = -1;
        bigint prod;     // valid iff small
        bool small = false;
    };

    std::ptrdiff_t build(std::size_t lo, std::size_t hi) {
        Node node;
        node.lo = lo;
        node.hi = hi;
        if (hi - lo == 1) {
            node.small = true;
            node.prod = bigint(static_cast<unsigned long>(values_[lo]));
        } else {
            std::size_t mid = lo + (hi - lo + 1) / 2; // left-heavy split
            node.left = build(lo, mid);
            node.right = build(mid, hi);
            const Node& l = nodes_[node.left];
            const Node& r = nodes_[node.right];
            if (l.small && r.small) {
                std::size_t bits = mpz_sizeinbase(l.prod.get_mpz_t(), 2) +
                                   mpz_sizeinbase(r.prod.get_mpz_t(), 2);
                if (bits <= threshold_bits_ + 1) {
                    node.prod = l.prod * r.prod;
                    node.small = true;
                }
            }
        }
        nodes_.push_back(std::move(node));
        return static_cast<std::ptrdiff_t>(nodes_.size() - 1);
    }

    void descend(std::ptrdiff_t idx, const bigint& rem, std::vector<char>& hits) const {
        const Node& node = nodes_[idx];
        if (node.hi - node.lo == 1) {
            std::uint64_t m = values_[node.lo];
            std::uint64_t r = static_cast<std::uint64_t>(mpz_fdiv_ui(rem.get_mpz_t(), m));
            hits[node.lo] = std::gcd(m, r) > 1 ? 1 : 0;
            return;
        }
        if (node.small && mpz_sizeinbase(rem.get_mpz_t(), 2) >= mpz_sizeinbase(node.prod.get_mpz_t(), 2)) {
            bigint reduced = rem % node.prod;
            descend(node.left, reduced, hits);
            descend(node.right, reduced, hits);
        } else {
            descend(node.left, rem, hits);
            descend(node.right, rem, hits);
        }
    }

    std::span<const std::uint64_t> values_;
    std::size_t threshold_bits_;
    std::vector<Node> nodes_;
    std::ptrdiff_t root_;
};

bigint product_of(std::span<const std::uint64_t> values) {
    if (values.size() == 1) return bigint(static_cast<unsigned long>(values[0]));
    std::size_t mid = (values.size() + 1) / 2;
    return product_of(values.subspan(0, mid)) * product_of(values.subspan(mid));
}

// Product tree over P whose splits mirror the recursion of
// prime_factors_among, so every recursion node reuses a precomputed product.
struct PrimeProductTree {
    struct Node {
        bigint prod;
        std::ptrdiff_t left = -1, right = -1;
    };
    std::vector<Node> nodes;
    std::ptrdiff_t root = -1;
    std::size_t cutoff;

    std::ptrdiff_t build(std::span<const std::uint64_t> p) {
        Node node;
        if (p.size() <= cutoff) {
            node.prod = product_of(p);
        } else {
            std::size_t mid = (p.size() + 1) / 2;
            node.left = build(p.subspan(0, mid));
            node.right = build(p.subspan(mid));
            node.prod = nodes[node.left].prod * nodes[node.right].prod;
        }
        nodes.push_back(std::move(node));
        return static_cast<std::ptrdiff_t>(nodes.size() - 1);
    }
};

std::vector<std::uint64_t> filter_by_modulus(std::span<const std::uint64_t> m, const bigint& modulus) {
    ModTree tree(m, mpz_sizeinbase(modulus.get_mpz_t(), 2));
    std::vector<char> hits(m.size(), 0);
    tree.mark_divisible(modulus, hits);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (hits[i]) out.push_back(m[i]);
    return out;
}

constexpr std::size_t kSplitCutoff = 8;

struct Searcher {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
    SearchStats* stats = nullptr;

    void record(std::span<const std::uint64_t> m, std::size_t level) {
        if (!stats) return;
        if (stats->per_level.size() <= level) stats->per_level.resize(level + 1);
        auto& lvl = stats->per_level[level];
        for (std::uint64_t v : m) {
            auto it = std::find_if(lvl.begin(), lvl.end(),
                                   [v](const auto& pr) { return pr.first == v; });
            if (it == lvl.end())
                lvl.emplace_back(v, 1);
            else
                ++it->second;
        }
    }

    void run(std::span<const std::uint64_t> m, std::span<const std::uint64_t> p,
             const PrimeProductTree& ptree, std::ptrdiff_t pnode, std::size_t level) {
        if (m.empty()) return;
        record(m, level);
        if (p.size() <= kSplitCutoff) {
            for (std::uint64_t v : m)
                for (std::uint64_t q : p)
                    if (v % q == 0) found.emplace_back(v, q);
            return;
        }
        std::size_t mid = (p.size() + 1) / 2;
        auto p1 = p.subspan(0, mid);
        auto p2 = p.subspan(mid);
        const auto& node = ptree.nodes[pnode];

        std::vector<char> h1(m.size(), 0), h2(m.size(), 0);
        {
            // One shared tree over m, two remainder pushdowns; freed before
            // recursing so peak memory stays one tree per level.
            std::size_t tb = std::max(mpz_sizeinbase(ptree.nodes[node.left].prod.get_mpz_t(), 2),
                                      mpz_sizeinbase(ptree.nodes[node.right].prod.get_mpz_t(), 2));
            ModTree tree(m, tb);
            tree.mark_divisible(ptree.nodes[node.left].prod, h1);
            tree.mark_divisible(ptree.nodes[node.right].prod, h2);
        }
        std::vector<std::uint64_t> m1, m2;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (h1[i]) m1.push_back(m[i]);
            if (h2[i]) m2.push_back(m[i]);
        }
        run(m1, p1, ptree, node.left, level + 1);
        run(m2, p2, ptree, node.right, level + 1);
    }
};

} // namespace

std::vector<std::uint64_t> divisible_subset(std::span<const std::uint64_t> m,
                                            std::span<const std::uint64_t> p) {
    if (m.empty() || p.empty()) throw invalid_input("divisible_subset requires non-empty inputs");
    for (std::uint64_t v : m)
        if (v == 0) throw invalid_input("values must be positive");
    bigint modulus = product_of(p);
    return filter_by_modulus(m, modulus);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
prime_factors_among(std::span<const std::uint64_t> m, std::span<const std::uint64_t> p,
                    SearchStats* stats) {
    if (m.empty() || p.empty()) throw invalid_input("prime_factors_among requires non-empty inputs");
    PrimeProductTree ptree;
    ptree.cutoff = kSplitCutoff;
    ptree.nodes.reserve(2 * (p.size() / kSplitCutoff + 2));
    ptree.root = ptree.build(p);
    Searcher searcher;
    searcher.stats = stats;
    searcher.run(m, p, ptree, ptree.root, 0);
    // Group by m in input order, primes ascending.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_m;
    for (auto& [mv, pv] : searcher.found) by_m[mv].push_back(pv);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(searcher.found.size());
    std::unordered_map<std::uint64_t, bool> emitted;
    for (std::uint64_t v : m) {
        if (emitted[v]) continue;
        emitted[v] = true;
        auto it = by_m.find(v);
        if (it == by_m.end()) continue;
        std::sort(it->second.begin(), it->second.end());
        for (std::uint64_t q : it->second) out.emplace_back(v, q);
    }
    return out;
}

std::vector<Factorization> factorize_batch(std::span<const std::uint64_t> m, std::uint64_t s,
                                           SearchStats* stats) {
    if (s == 0) throw invalid_input("range bound s must be >= 1");
    for (std::uint64_t v : m)
        if (v < 1 || v > s)
            throw out_of_range("value " + std::to_string(v) + " outside [1, " + std::to_string(s) + "]");

    // Deduplicate; results fan back out to the input order.
    std::vector<std::uint64_t> distinct(m.begin(), m.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::unordered_map<std::uint64_t, std::vector<FactorPower>> table;
    table.reserve(distinct.size() * 2);
    for (std::uint64_t v : distinct) table.emplace(v, std::vector<FactorPower>{});

    std::uint64_t root = isqrt_u64(s);
    PrimeTable primes = root >= 2 ? sieve_primes(root) : PrimeTable{root, {}};

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t v : distinct)
        if (v > 1) candidates.push_back(v);

    if (!candidates.empty() && !primes.primes.empty()) {
        auto pairs = prime_factors_among(candidates, primes.primes, stats);
        for (auto& [value, prime] : pairs) {
            std::uint64_t tmp = value;
            std::uint32_t e = 0;
            while (tmp % prime == 0) {
                tmp /= prime;
                ++e;
            }
            table[value].push_back({prime, e});
        }
    }

    for (std::uint64_t v : distinct) {
        auto& factors = table[v];
        std::sort(factors.begin(), factors.end(),
                  [](const FactorPower& a, const FactorPower& b) { return a.prime < b.prime; });
        std::uint64_t rest = v;
        for (const auto& f : factors)
            for (std::uint32_t i = 0; i < f.exp; ++i) rest /= f.prime;
        if (rest > 1) factors.push_back({rest, 1}); // the single prime factor > sqrt(s)
    }

    std::vector<Factorization> out;
    out.reserve(m.size());
    for (std::uint64_t v : m) out.push_back({v, table[v]});
    return out;
}

} // namespace densesum
