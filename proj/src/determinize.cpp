#include "scw/determinize.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <span>

namespace scw {

std::vector<State> SubsetDfa::label(State q) const {
    std::vector<State> out;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = labels_[q * words_ + w];
        while (bits) {
            out.push_back(static_cast<State>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

namespace {

using Word = std::uint64_t;

std::uint64_t mix(std::uint64_t h) noexcept {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

// Open-addressing index from bit rows to their position in the arena.
class SubsetArena {
public:
    explicit SubsetArena(std::size_t words) : words_(words), slots_(1024, empty) {}

    std::size_t size() const noexcept { return count_; }
    std::span<const Word> row(State q) const { return {rows_.data() + q * words_, words_}; }
    std::vector<Word> release() { return std::move(rows_); }

    // Returns the state number of `bits`, appending it if new.
    std::pair<State, bool> insert(const Word* bits) {
        if ((count_ + 1) * 2 > slots_.size()) grow();
        std::size_t slot = hash(bits) & (slots_.size() - 1);
        while (slots_[slot] != empty) {
            if (std::equal(bits, bits + words_, rows_.data() + std::size_t{slots_[slot]} * words_))
                return {slots_[slot], false};
            slot = (slot + 1) & (slots_.size() - 1);
        }
        const auto id = static_cast<State>(count_++);
        slots_[slot] = id;
        rows_.insert(rows_.end(), bits, bits + words_);
        return {id, true};
    }

private:
    static constexpr State empty = ~State{0};

    std::uint64_t hash(const Word* bits) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t w = 0; w < words_; ++w) h = mix(h ^ bits[w]);
        return h;
    }

    void grow() {
        std::vector<State> bigger(slots_.size() * 2, empty);
        for (std::size_t id = 0; id < count_; ++id) {
            std::size_t slot = hash(rows_.data() + id * words_) & (bigger.size() - 1);
            while (bigger[slot] != empty) slot = (slot + 1) & (bigger.size() - 1);
            bigger[slot] = static_cast<State>(id);
        }
        slots_ = std::move(bigger);
    }

    std::size_t words_;
    std::size_t count_ = 0;
    std::vector<Word> rows_;
    std::vector<State> slots_;
};

// Per-letter successor tables. Since closure distributes over union, the
// successor of a subset is the union of closure(moves(p, x)) over its members.
// Single-word subsets use byte lookup tables.
class StepTable {
public:
    explicit StepTable(const EpsNfa& nfa)
        : size_(nfa.size()), letters_(nfa.letter_count()), words_((nfa.size() + 63) / 64) {
        steps_.assign(letters_ * size_ * words_, 0);
        for (std::size_t x = 0; x < letters_; ++x) {
            for (State p = 0; p < size_; ++p) {
                std::vector<State> targets = nfa.moves(p, x);
                Word* row = steps_.data() + (x * size_ + p) * words_;
                for (State r : nfa.closure(std::move(targets))) row[r / 64] |= Word{1} << (r % 64);
            }
        }
        if (words_ == 1) {
            chunks_ = (size_ + 7) / 8;
            bytes_.assign(letters_ * chunks_ * 256, 0);
            for (std::size_t x = 0; x < letters_; ++x) {
                for (std::size_t c = 0; c < chunks_; ++c) {
                    Word* table = bytes_.data() + (x * chunks_ + c) * 256;
                    for (unsigned b = 1; b < 256; ++b) {
                        const unsigned low = std::countr_zero(b);
                        const State p = static_cast<State>(c * 8 + low);
                        Word bit = p < size_ ? steps_[x * size_ + p] : 0;
                        table[b] = table[b & (b - 1)] | bit;
                    }
                }
            }
        }
    }

    std::size_t words() const noexcept { return words_; }

    void successor(const Word* from, std::size_t x, Word* out) const noexcept {
        if (words_ == 1) {
            const Word* table = bytes_.data() + x * chunks_ * 256;
            Word bits = from[0];
            Word acc = 0;
            for (std::size_t c = 0; bits; ++c, bits >>= 8) acc |= table[c * 256 + (bits & 0xff)];
            out[0] = acc;
            return;
        }
        std::fill(out, out + words_, Word{0});
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = from[w];
            while (bits) {
                const std::size_t p = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const Word* row = steps_.data() + (x * size_ + p) * words_;
                for (std::size_t v = 0; v < words_; ++v) out[v] |= row[v];
            }
        }
    }

private:
    std::size_t size_;
    std::size_t letters_;
    std::size_t words_;
    std::size_t chunks_ = 0;
    std::vector<Word> steps_;
    std::vector<Word> bytes_;
};

std::vector<Word> initial_row(const EpsNfa& nfa, std::size_t words) {
    std::vector<Word> row(words, 0);
    for (State q : nfa.closure(nfa.initials())) row[q / 64] |= Word{1} << (q % 64);
    return row;
}

SubsetDfa assemble(const EpsNfa& nfa, SubsetArena& arena, std::vector<std::vector<State>>& rows) {
    const std::size_t words = (nfa.size() + 63) / 64;
    std::vector<Word> final_row(words, 0);
    for (State f : nfa.finals()) final_row[f / 64] |= Word{1} << (f % 64);

    std::vector<State> finals;
    for (State q = 0; q < arena.size(); ++q) {
        auto row = arena.row(q);
        for (std::size_t w = 0; w < words; ++w) {
            if (row[w] & final_row[w]) {
                finals.push_back(q);
                break;
            }
        }
    }
    std::vector<Transformation> delta;
    delta.reserve(rows.size());
    for (auto& r : rows) delta.push_back(Transformation::from_image(std::move(r)));
    const std::size_t count = arena.size();
    Dfa dfa(count, nfa.alphabet(), std::move(delta), 0, std::move(finals));
    return SubsetDfa(std::move(dfa), nfa.size(), words, arena.release());
}

}  // namespace

SubsetDfa determinize_serial(const EpsNfa& nfa, std::size_t cap) {
    const StepTable steps(nfa);
    const std::size_t words = steps.words();
    const std::size_t k = nfa.letter_count();
    SubsetArena arena(words);
    arena.insert(initial_row(nfa, words).data());

    std::vector<std::vector<State>> rows(k);
    std::vector<Word> from(words), next(words);
    for (State q = 0; q < arena.size(); ++q) {
        auto row = arena.row(q);
        std::copy(row.begin(), row.end(), from.begin());
        for (std::size_t x = 0; x < k; ++x) {
            steps.successor(from.data(), x, next.data());
            rows[x].push_back(arena.insert(next.data()).first);
            if (arena.size() > cap) throw SubsetCapExceeded(cap);
        }
    }
    return assemble(nfa, arena, rows);
}

SubsetDfa determinize(const EpsNfa& nfa, std::size_t cap) {
    const StepTable steps(nfa);
    const std::size_t words = steps.words();
    const std::size_t k = nfa.letter_count();
    SubsetArena arena(words);
    arena.insert(initial_row(nfa, words).data());

    std::vector<std::vector<State>> rows(k);
    std::vector<Word> frontier_rows;
    std::vector<Word> successors;
    std::size_t level_begin = 0;
    while (level_begin < arena.size()) {
        const std::size_t level_end = arena.size();
        const std::size_t width = level_end - level_begin;
        frontier_rows.assign(width * words, 0);
        for (std::size_t i = 0; i < width; ++i) {
            auto row = arena.row(static_cast<State>(level_begin + i));
            std::copy(row.begin(), row.end(), frontier_rows.begin() + i * words);
        }
        successors.assign(width * k * words, 0);

        const auto n = static_cast<std::int64_t>(width);
#pragma omp parallel for schedule(static) if (n > 256)
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::size_t x = 0; x < k; ++x) {
                steps.successor(frontier_rows.data() + i * words, x,
                                successors.data() + (i * k + x) * words);
            }
        }

        for (std::size_t i = 0; i < width; ++i) {
            for (std::size_t x = 0; x < k; ++x) {
                rows[x].push_back(arena.insert(successors.data() + (i * k + x) * words).first);
                if (arena.size() > cap) throw SubsetCapExceeded(cap);
            }
        }
        level_begin = level_end;
    }
    return assemble(nfa, arena, rows);
}

}  // namespace scw
