#include "galmeasure/perm.hpp"

#include <numeric>

#include "galmeasure/errors.hpp"

namespace galmeas {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            fail("InvalidPermutation", "image list is not a bijection of the domain");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(static_cast<size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<char> done(images_.size(), 0);
    for (size_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == static_cast<int>(start)) continue;
        out += '(';
        size_t p = start;
        bool first = true;
        while (!done[p]) {
            done[p] = 1;
            if (!first) out += ' ';
            out += std::to_string(p);
            first = false;
            p = static_cast<size_t>(images_[p]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    std::vector<int> im(b.images().size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = a[b[static_cast<int>(i)]];
    return Permutation(std::move(im));
}

}  // namespace galmeas
