#include "scw/minimize.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace scw {

namespace {

Partition normalize(const std::vector<State>& raw) {
    std::unordered_map<State, State> renumber;
    Partition out(raw.size());
    for (std::size_t q = 0; q < raw.size(); ++q) {
        auto [it, inserted] = renumber.emplace(raw[q], static_cast<State>(renumber.size()));
        out[q] = it->second;
    }
    return out;
}

// Inverse transitions per letter in CSR form.
struct Inverse {
    std::vector<std::uint32_t> offsets;  // letters * (n + 1)
    std::vector<State> sources;          // letters * n

    Inverse(const Dfa& d) : offsets(d.letter_count() * (d.size() + 1), 0), sources(d.letter_count() * d.size()) {
        const std::size_t n = d.size();
        for (std::size_t x = 0; x < d.letter_count(); ++x) {
            auto* off = offsets.data() + x * (n + 1);
            for (State p = 0; p < n; ++p) ++off[d.next(p, x) + 1];
            for (std::size_t q = 0; q < n; ++q) off[q + 1] += off[q];
            std::vector<std::uint32_t> fill(off, off + n);
            auto* src = sources.data() + x * n;
            for (State p = 0; p < n; ++p) src[fill[d.next(p, x)]++] = p;
        }
    }
};

}  // namespace

Partition refine_hopcroft(const Dfa& d) {
    const std::size_t n = d.size();
    const std::size_t k = d.letter_count();
    const Inverse inv(d);

    std::vector<State> elems(n), loc(n), block_of(n);
    std::vector<std::uint32_t> first, end, marked;
    std::vector<char> in_work;
    std::vector<State> work;

    // Initial partition: finals, then the rest.
    std::size_t pos = 0;
    for (State q = 0; q < n; ++q)
        if (d.is_final(q)) elems[pos++] = q;
    const std::size_t split = pos;
    for (State q = 0; q < n; ++q)
        if (!d.is_final(q)) elems[pos++] = q;
    auto add_block = [&](std::uint32_t b, std::uint32_t e) {
        first.push_back(b);
        end.push_back(e);
        marked.push_back(0);
        in_work.push_back(0);
        const auto id = static_cast<State>(first.size() - 1);
        for (std::uint32_t i = b; i < e; ++i) block_of[elems[i]] = id;
        return id;
    };
    if (split > 0) add_block(0, static_cast<std::uint32_t>(split));
    if (split < n) add_block(static_cast<std::uint32_t>(split), static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) loc[elems[i]] = static_cast<State>(i);

    auto push = [&](State b) {
        if (!in_work[b]) {
            in_work[b] = 1;
            work.push_back(b);
        }
    };
    if (first.size() == 2) {
        push(end[0] - first[0] <= end[1] - first[1] ? 0 : 1);
    }

    std::vector<State> splitter;
    std::vector<State> touched;
    while (!work.empty()) {
        const State c = work.back();
        work.pop_back();
        in_work[c] = 0;
        splitter.assign(elems.begin() + first[c], elems.begin() + end[c]);

        for (std::size_t x = 0; x < k; ++x) {
            const auto* off = inv.offsets.data() + x * (n + 1);
            const auto* src = inv.sources.data() + x * n;
            touched.clear();
            for (State q : splitter) {
                for (auto i = off[q]; i < off[q + 1]; ++i) {
                    const State p = src[i];
                    const State b = block_of[p];
                    const std::uint32_t target = first[b] + marked[b];
                    const State other = elems[target];
                    std::swap(elems[loc[p]], elems[target]);
                    loc[other] = loc[p];
                    loc[p] = target;
                    if (marked[b]++ == 0) touched.push_back(b);
                }
            }
            for (State b : touched) {
                const std::uint32_t m = marked[b];
                marked[b] = 0;
                if (m == end[b] - first[b]) continue;
                const std::uint32_t lo = first[b];
                first[b] = lo + m;
                const State fresh = add_block(lo, lo + m);
                if (in_work[b]) {
                    push(fresh);
                } else {
                    push(m <= end[b] - first[b] ? fresh : b);
                }
            }
        }
    }
    return normalize(block_of);
}

namespace {

template <bool Parallel>
Partition moore(const Dfa& d) {
    const std::size_t n = d.size();
    const std::size_t k = d.letter_count();
    const std::size_t width = k + 1;
    std::vector<State> classes(n);
    for (State q = 0; q < n; ++q) classes[q] = d.is_final(q) ? 1 : 0;
    classes = normalize(classes);
    std::size_t count = class_count(classes);

    std::vector<State> signature(n * width);
    std::vector<std::uint64_t> hashes(n);
    const auto sn = static_cast<std::int64_t>(n);
    for (;;) {
#pragma omp parallel for schedule(static) if (Parallel && sn > 4096)
        for (std::int64_t q = 0; q < sn; ++q) {
            State* sig = signature.data() + q * width;
            sig[0] = classes[q];
            std::uint64_t h = 0xcbf29ce484222325ULL ^ sig[0];
            for (std::size_t x = 0; x < k; ++x) {
                sig[x + 1] = classes[d.next(static_cast<State>(q), x)];
                h = (h ^ sig[x + 1]) * 0x100000001b3ULL;
            }
            hashes[q] = h;
        }

        std::unordered_multimap<std::uint64_t, State> seen;
        seen.reserve(count * 2);
        std::vector<State> next(n);
        State fresh = 0;
        for (State q = 0; q < n; ++q) {
            const State* sig = signature.data() + q * width;
            auto [lo, hi] = seen.equal_range(hashes[q]);
            bool found = false;
            for (auto it = lo; it != hi; ++it) {
                const State rep = it->second;
                if (std::equal(sig, sig + width, signature.data() + rep * width)) {
                    next[q] = next[rep];
                    found = true;
                    break;
                }
            }
            if (!found) {
                next[q] = fresh++;
                seen.emplace(hashes[q], q);
            }
        }
        classes = std::move(next);
        if (fresh == count) break;
        count = fresh;
    }
    return classes;
}

}  // namespace

Partition refine_moore(const Dfa& d) { return moore<true>(d); }
Partition refine_moore_serial(const Dfa& d) { return moore<false>(d); }

std::size_t class_count(const Partition& p) {
    return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + std::size_t{1};
}

Dfa trim_unreachable(const Dfa& d) {
    Partition identity(d.size());
    for (State q = 0; q < d.size(); ++q) identity[q] = q;
    return canonical_quotient(d, identity);
}

Dfa canonical_quotient(const Dfa& d, const Partition& classes) {
    const std::size_t k = d.letter_count();
    const State none = ~State{0};
    std::vector<State> number(class_count(classes), none);
    std::vector<State> representative;
    std::vector<std::vector<State>> rows(k);

    number[classes[d.initial()]] = 0;
    representative.push_back(d.initial());
    for (std::size_t i = 0; i < representative.size(); ++i) {
        const State rep = representative[i];
        for (std::size_t x = 0; x < k; ++x) {
            const State target = d.next(rep, x);
            State& id = number[classes[target]];
            if (id == none) {
                id = static_cast<State>(representative.size());
                representative.push_back(target);
            }
            rows[x].push_back(id);
        }
    }
    std::vector<Transformation> delta;
    delta.reserve(k);
    for (auto& r : rows) delta.push_back(Transformation::from_image(std::move(r)));
    std::vector<State> finals;
    for (std::size_t i = 0; i < representative.size(); ++i)
        if (d.is_final(representative[i])) finals.push_back(static_cast<State>(i));
    return Dfa(representative.size(), d.alphabet(), std::move(delta), 0, std::move(finals));
}

Dfa minimize(const Dfa& d, Refinement how) {
    const Dfa reachable = trim_unreachable(d);
    Partition classes;
    switch (how) {
        case Refinement::Hopcroft: classes = refine_hopcroft(reachable); break;
        case Refinement::Moore: classes = refine_moore(reachable); break;
        case Refinement::MooreSerial: classes = refine_moore_serial(reachable); break;
    }
    return canonical_quotient(reachable, classes);
}

bool is_minimal(const Dfa& d) {
    return trim_unreachable(d).size() == d.size() && class_count(refine_hopcroft(d)) == d.size();
}

}  // namespace scw
