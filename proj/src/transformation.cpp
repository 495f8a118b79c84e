#include "scw/transformation.hpp"

#include <numeric>
#include <stdexcept>

namespace scw {

namespace {

void require_degree(std::size_t n) {
    if (n == 0) throw std::invalid_argument("transformation degree must be positive");
}

void require_state(std::size_t n, State s, const char* what) {
    if (s >= n) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(s) +
                                " out of range for degree " + std::to_string(n));
    }
}

}  // namespace

Transformation Transformation::from_image(std::vector<State> image) {
    require_degree(image.size());
    for (State s : image) require_state(image.size(), s, "image");
    return Transformation(std::move(image));
}

Transformation Transformation::identity(std::size_t n) {
    require_degree(n);
    std::vector<State> image(n);
    std::iota(image.begin(), image.end(), State{0});
    return Transformation(std::move(image));
}

Transformation Transformation::cycle(std::size_t n) {
    require_degree(n);
    std::vector<State> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<State>((i + 1) % n);
    return Transformation(std::move(image));
}

Transformation Transformation::transposition(std::size_t n, State i, State j) {
    auto t = identity(n);
    require_state(n, i, "transposition");
    require_state(n, j, "transposition");
    std::swap(t.image_[i], t.image_[j]);
    return t;
}

Transformation Transformation::singular(std::size_t n, State i, State j) {
    auto t = identity(n);
    require_state(n, i, "singular");
    require_state(n, j, "singular");
    t.image_[i] = j;
    return t;
}

Transformation Transformation::constant(std::size_t n, State k) {
    require_degree(n);
    require_state(n, k, "constant");
    return Transformation(std::vector<State>(n, k));
}

Transformation Transformation::subcycle(std::size_t n, State lo, State hi) {
    auto t = identity(n);
    require_state(n, lo, "subcycle");
    require_state(n, hi, "subcycle");
    if (lo > hi) throw std::out_of_range("subcycle requires lo <= hi");
    for (State s = lo; s < hi; ++s) t.image_[s] = s + 1;
    t.image_[hi] = lo;
    return t;
}

State Transformation::apply(State s) const {
    require_state(degree(), s, "state");
    return image_[s];
}

bool Transformation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

bool Transformation::is_bijection() const {
    std::vector<bool> hit(image_.size(), false);
    for (State s : image_) {
        if (hit[s]) return false;
        hit[s] = true;
    }
    return true;
}

Transformation compose(const Transformation& first, const Transformation& second) {
    if (first.degree() != second.degree()) {
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(first.degree()) +
                                    " vs " + std::to_string(second.degree()) + ")");
    }
    std::vector<State> image(first.degree());
    for (std::size_t s = 0; s < image.size(); ++s) image[s] = second(first(static_cast<State>(s)));
    return Transformation::from_image(std::move(image));
}

std::string to_string(const Transformation& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(t(static_cast<State>(i)));
    }
    return out + "]";
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (State s : t.image()) {
        h ^= s;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace scw
