#pragma once

#include <compare>
#include <string>
#include <vector>

namespace galmeas {

// A permutation of {0,...,degree-1}, stored as the image list.
class Permutation {
public:
    // Validates that images is a bijection; throws InvalidPermutation.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator[](int p) const { return images_[static_cast<size_t>(p)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    std::strong_ordering operator<=>(const Permutation& o) const noexcept {
        return images_ <=> o.images_;
    }
    bool operator==(const Permutation& o) const noexcept = default;

    std::string to_string() const;  // cycle notation, "()" for identity

private:
    std::vector<int> images_;
};

// compose(a, b) applies b first, then a: (a*b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace galmeas
