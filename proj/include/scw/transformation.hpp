#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace scw {

using State = std::uint32_t;

/// A total self-map of the state set {0, ..., n-1}.
///
/// The named constructors cover every letter shape used by the witness
/// families: the full cycle, transpositions, singular maps (i -> j),
/// identity, constants and cycles over a contiguous range.
class Transformation {
public:
    Transformation() = default;

    /// Arbitrary image vector; every entry must lie in [0, image.size()).
    static Transformation from_image(std::vector<State> image);

    static Transformation identity(std::size_t n);
    /// (0, 1, ..., n-1): i -> i+1 mod n.
    static Transformation cycle(std::size_t n);
    /// Swaps i and j; fixes everything else.
    static Transformation transposition(std::size_t n, State i, State j);
    /// Sends i to j; fixes everything else.
    static Transformation singular(std::size_t n, State i, State j);
    /// Sends every state to k.
    static Transformation constant(std::size_t n, State k);
    /// (lo, lo+1, ..., hi): cycles [lo, hi], fixes the rest.
    static Transformation subcycle(std::size_t n, State lo, State hi);

    std::size_t degree() const noexcept { return image_.size(); }
    std::span<const State> image() const noexcept { return image_; }

    State operator()(State s) const { return image_[s]; }
    State apply(State s) const;

    bool is_identity() const noexcept;
    bool is_bijection() const;

    bool operator==(const Transformation&) const = default;
    auto operator<=>(const Transformation&) const = default;

private:
    explicit Transformation(std::vector<State> image) : image_(std::move(image)) {}

    std::vector<State> image_;
};

/// Left-to-right composition: the result maps s to second(first(s)),
/// matching the action of the word `first second`.
Transformation compose(const Transformation& first, const Transformation& second);

std::string to_string(const Transformation& t);

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const noexcept;
};

}  // namespace scw
