#include "ssk3/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <thread>

#include "ssk3/errors.hpp"

namespace ssk3 {

namespace {

std::vector<Mask> omega_tilde(const WordSeq& seq, int n) {
    std::vector<Mask> t{full_mask(n)};
    t.reserve(std::size_t{1} << seq.size());
    for (Mask a : seq) {
        std::size_t h = t.size();
        for (std::size_t j = 0; j < h; ++j) t.push_back(t[j] & a);
    }
    return t;
}

std::vector<Mask> sorted_words(const WordSeq& seq, int n) {
    auto w = Code(n, seq).words();
    std::sort(w.begin(), w.end());
    return w;
}

struct MatchState {
    const std::vector<int>& target;
    const std::vector<Mask>& words;
    const std::vector<std::uint64_t>* word_inv;  // optional filter, aligned with words
    const std::vector<std::uint64_t>* want_inv;  // per position
    std::vector<Mask> tilde;
    WordSeq out;
};

bool match_rec(MatchState& st, std::size_t depth, std::size_t k) {
    if (depth == k) return true;
    std::size_t h = st.tilde.size();
    int want = st.target[h];
    for (std::size_t wi = 0; wi < st.words.size(); ++wi) {
        Mask w = st.words[wi];
        if (std::popcount(w) != want) continue;
        if (st.word_inv && (*st.word_inv)[wi] != (*st.want_inv)[depth]) continue;
        bool ok = true;
        for (std::size_t j = 1; j < h && ok; ++j) ok = std::popcount(st.tilde[j] & w) == st.target[h + j];
        if (!ok) continue;
        for (std::size_t j = 0; j < h; ++j) st.tilde.push_back(st.tilde[j] & w);
        st.out.push_back(w);
        if (match_rec(st, depth + 1, k)) return true;
        st.out.pop_back();
        st.tilde.resize(h);
    }
    return false;
}

std::optional<WordSeq> run_match(MatchState& st, int n) {
    if (st.target.empty() || !std::has_single_bit(st.target.size()) || st.target[0] != n) return std::nullopt;
    std::size_t k = static_cast<std::size_t>(std::countr_zero(st.target.size()));
    st.tilde = {full_mask(n)};
    if (!match_rec(st, 0, k)) return std::nullopt;
    return st.out;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Permutation-invariant hash of each word inside its code: the multiset of
// (|V|, |W & V|) over all code words V.
std::vector<std::uint64_t> word_invariants(const std::vector<Mask>& words) {
    std::vector<std::uint64_t> inv(words.size(), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t h = 0;
        for (Mask v : words)
            h += mix((static_cast<std::uint64_t>(std::popcount(v)) << 8) | static_cast<std::uint64_t>(std::popcount(words[i] & v)));
        inv[i] = h;
    }
    return inv;
}

// Grouping key: weight enumerator, then the sorted per-point weight profiles.
std::vector<int> class_key(const std::vector<Mask>& words, int n) {
    std::vector<int> key(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (Mask w : words) {
        int wt = std::popcount(w);
        ++key[static_cast<std::size_t>(wt)];
        for (Mask m = w; m; m &= m - 1) ++prof[static_cast<std::size_t>(std::countr_zero(m))][static_cast<std::size_t>(wt)];
    }
    std::sort(prof.begin(), prof.end());
    for (const auto& p : prof) key.insert(key.end(), p.begin(), p.end());
    return key;
}

struct Candidate {
    WordSeq seq;
    std::vector<Mask> words;  // ascending
    std::vector<std::uint64_t> word_inv;  // aligned with words
    std::vector<std::uint64_t> seq_inv;   // invariant of each word of seq
    std::vector<int> omega;
    std::vector<int> key;
};

Candidate make_candidate(WordSeq seq, std::vector<Mask> words, int n) {
    Candidate c;
    c.seq = std::move(seq);
    c.words = std::move(words);
    c.word_inv = word_invariants(c.words);
    for (Mask a : c.seq) {
        auto it = std::lower_bound(c.words.begin(), c.words.end(), a);
        c.seq_inv.push_back(c.word_inv[static_cast<std::size_t>(it - c.words.begin())]);
    }
    c.omega = omega_print(c.seq, n);
    c.key = class_key(c.words, n);
    std::vector<std::uint64_t> sorted_inv = c.word_inv;
    std::sort(sorted_inv.begin(), sorted_inv.end());
    for (std::uint64_t h : sorted_inv) c.key.push_back(static_cast<int>(h & 0x7fffffff));
    return c;
}

bool same_class(const Candidate& a, const Candidate& b, int n) {
    if (a.words == b.words) return true;
    MatchState st{a.omega, b.words, &b.word_inv, &a.seq_inv, {}, {}};
    return run_match(st, n).has_value();
}

// Keeps the first representative of each class, in insertion order.
class Deduper {
public:
    explicit Deduper(int n) : n_(n) {}

    bool insert(Candidate c) {
        auto& group = groups_[c.key];
        for (std::size_t i : group)
            if (same_class(c, kept_[i], n_)) return false;
        group.push_back(kept_.size());
        kept_.push_back(std::move(c));
        return true;
    }

    std::vector<Candidate>& kept() { return kept_; }

private:
    int n_;
    std::map<std::vector<int>, std::vector<std::size_t>> groups_;
    std::vector<Candidate> kept_;
};

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<Candidate> expand_parent(const ClassEntry& parent, const CensusParams& p) {
    int n = p.n;
    std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 0);
    for (int w : p.weights)
        if (w > 0 && w <= n) allowed[static_cast<std::size_t>(w)] = 1;

    // blocks of equal column value
    std::vector<std::pair<int, int>> blocks;  // (start, size)
    std::uint64_t prev = ~std::uint64_t{0};
    for (int j = 0; j < n; ++j) {
        std::uint64_t v = 0;
        for (Mask a : parent.std_basis) v = (v << 1) | ((a >> j) & 1U);
        if (v != prev) blocks.push_back({j, 0});
        ++blocks.back().second;
        prev = v;
    }
    std::vector<Mask> span = Code(n, parent.std_basis).words();
    int max_w = n / 2;

    Deduper dd(n);
    std::vector<Mask> found;
    auto leaf = [&](Mask a, int wt) {
        if (!allowed[static_cast<std::size_t>(wt)]) return;
        for (Mask b : span) {
            int s = std::popcount(a ^ b);
            if (!allowed[static_cast<std::size_t>(s)]) return;
        }
        found.push_back(a);
    };
    auto dfs = [&](auto& self, std::size_t bi, Mask a, int wt) -> void {
        if (bi == blocks.size()) {
            leaf(a, wt);
            return;
        }
        auto [start, size] = blocks[bi];
        Mask tail = 0;
        for (int c = 0; c <= size && wt + c <= max_w; ++c) {
            self(self, bi + 1, a | tail, wt + c);
            tail |= Mask{1} << (start + size - 1 - c);
        }
    };
    dfs(dfs, 0, 0, 0);

    // different tail words often span the same code
    std::set<std::vector<Mask>> seen;
    for (Mask a : found) {
        WordSeq seq = parent.std_basis;
        seq.push_back(a);
        if (!seen.insert(Code(n, seq).basis()).second) continue;
        std::vector<Mask> words;
        words.reserve(span.size() * 2);
        for (Mask b : span) {
            words.push_back(b);
            words.push_back(b ^ a);
        }
        std::sort(words.begin(), words.end());
        dd.insert(make_candidate(std::move(seq), std::move(words), n));
    }
    return std::move(dd.kept());
}

// Codimension-1 subcodes containing the all-ones word, each as sorted words.
std::vector<std::vector<Mask>> hyperplanes_with_ones(const WordSeq& seq, int n) {
    Code code(n, seq);
    const auto& basis = code.basis();
    std::size_t d = basis.size();
    std::vector<Mask> by_coord(std::size_t{1} << d, 0);
    std::size_t ones = 0;
    for (std::size_t c = 1; c < by_coord.size(); ++c) {
        by_coord[c] = by_coord[c & (c - 1)] ^ basis[static_cast<std::size_t>(std::countr_zero(c))];
        if (by_coord[c] == full_mask(n)) ones = c;
    }
    std::vector<std::vector<Mask>> out;
    for (std::size_t f = 1; f < by_coord.size(); ++f) {
        if (std::popcount(f & ones) % 2) continue;
        std::vector<Mask> h;
        for (std::size_t c = 0; c < by_coord.size(); ++c)
            if (std::popcount(f & c) % 2 == 0) h.push_back(by_coord[c]);
        std::sort(h.begin(), h.end());
        out.push_back(std::move(h));
    }
    return out;
}

ClassEntry make_entry(WordSeq seq, int n, int id) {
    ClassEntry e;
    e.id = id;
    e.std_basis = std::move(seq);
    Code code(n, e.std_basis);
    e.dim = code.dim();
    e.weight_enumerator = code.weight_enumerator();
    e.omega = omega_print(e.std_basis, n);
    if (n == 21) e.invariants = config_invariants(code);
    return e;
}

}  // namespace

std::vector<int> omega_print(const WordSeq& seq, int n) {
    auto t = omega_tilde(seq, n);
    std::vector<int> out;
    out.reserve(t.size());
    for (Mask m : t) out.push_back(std::popcount(m));
    return out;
}

bool is_sn_increasing(const WordSeq& seq, int n) {
    std::uint64_t prev = 0;
    for (int j = 0; j < n; ++j) {
        std::uint64_t v = 0;
        for (Mask a : seq) v = (v << 1) | ((a >> j) & 1U);
        if (v < prev) return false;
        prev = v;
    }
    return true;
}

std::optional<WordSeq> omega_match(const std::vector<int>& target, const std::vector<Mask>& code_words, int n) {
    MatchState st{target, code_words, nullptr, nullptr, {}, {}};
    return run_match(st, n);
}

bool equivalent(const WordSeq& a, const WordSeq& b, int n) {
    Code ca(n, a), cb(n, b);
    if (ca.dim() != cb.dim()) return false;
    if (ca.weight_enumerator() != cb.weight_enumerator()) return false;
    return omega_match(omega_print(ca.basis(), n), sorted_words(b, n), n).has_value();
}

std::vector<ClassEntry> extend_level(const std::vector<ClassEntry>& level, const CensusParams& p, int first_id) {
    std::vector<std::vector<Candidate>> per_parent(level.size());
    parallel_for(level.size(), p.threads, [&](std::size_t i) { per_parent[i] = expand_parent(level[i], p); });

    Deduper dd(p.n);
    for (auto& list : per_parent)
        for (auto& c : list) dd.insert(std::move(c));
    std::vector<ClassEntry> out;
    for (auto& c : dd.kept()) out.push_back(make_entry(std::move(c.seq), p.n, first_id + static_cast<int>(out.size())));
    return out;
}

std::vector<const ClassEntry*> CensusResult::all() const {
    std::vector<const ClassEntry*> v;
    for (const auto& l : levels)
        for (const auto& e : l) v.push_back(&e);
    return v;
}

std::size_t CensusResult::total() const {
    std::size_t t = 0;
    for (const auto& l : levels) t += l.size();
    return t;
}

std::vector<int> CensusResult::sigma_counts() const {
    std::vector<int> c(10, 0);
    for (const auto& l : levels)
        for (const auto& e : l)
            if (e.dim >= 1 && e.dim <= 10) ++c[static_cast<std::size_t>(10 - e.dim)];
    return c;
}

CensusResult run_census(const CensusParams& p) {
    if (p.n < 1 || p.n > 64) throw std::invalid_argument("census length must be in 1..64");
    if (p.max_dim > p.n) throw std::invalid_argument("max_dim exceeds the code length");
    CensusResult r;
    r.params = p;
    if (p.max_dim < 1) return r;
    r.levels.push_back({make_entry({full_mask(p.n)}, p.n, 1)});
    int next_id = 2;
    while (static_cast<int>(r.levels.size()) < p.max_dim) {
        auto lvl = extend_level(r.levels.back(), p, next_id);
        if (lvl.empty()) break;
        next_id += static_cast<int>(lvl.size());
        r.levels.push_back(std::move(lvl));
    }
    for (std::size_t k = 0; k + 1 < r.levels.size(); ++k) {
        const auto& lo = r.levels[k];
        const auto& hi = r.levels[k + 1];
        std::vector<Candidate> lo_c;
        for (const auto& e : lo) lo_c.push_back(make_candidate(e.std_basis, sorted_words(e.std_basis, p.n), p.n));
        std::vector<std::vector<char>> rel(hi.size());
        parallel_for(hi.size(), p.threads, [&](std::size_t j) {
            rel[j].assign(lo.size(), 0);
            for (auto& h : hyperplanes_with_ones(hi[j].std_basis, p.n)) {
                Candidate hc = make_candidate(Code(p.n, h).basis(), std::move(h), p.n);
                for (std::size_t i = 0; i < lo.size(); ++i)
                    if (!rel[j][i] && lo_c[i].key == hc.key && same_class(lo_c[i], hc, p.n)) rel[j][i] = 1;
            }
        });
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < hi.size(); ++j)
                if (rel[j][i]) r.edges.push_back({lo[i].id, hi[j].id});
    }
    return r;
}

bool class_leq(const ClassEntry& a, const ClassEntry& b, int n) {
    if (a.dim > b.dim) return false;
    for (std::size_t w = 0; w < a.weight_enumerator.size() && w < b.weight_enumerator.size(); ++w)
        if (a.weight_enumerator[w] > b.weight_enumerator[w]) return false;
    return omega_match(a.omega, sorted_words(b.std_basis, n), n).has_value();
}

const ClassEntry& match_class(const ConfigInvariants& inv, const CensusResult& census) {
    const ClassEntry* hit = nullptr;
    for (const ClassEntry* e : census.all()) {
        if (!e->invariants || *e->invariants != inv) continue;
        if (hit) throw AmbiguousMatch("several census classes share the invariant tuple");
        hit = e;
    }
    if (!hit) throw NoMatch("no census class has the invariant tuple");
    return *hit;
}

std::uint64_t encode_mask(Mask m, int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1U) v |= std::uint64_t{1} << (n - 1 - i);
    return v;
}

Mask decode_mask(std::uint64_t v, int n) { return encode_mask(v, n); }

}  // namespace ssk3
