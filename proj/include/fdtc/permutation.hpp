#ifndef FDTC_PERMUTATION_HPP
#define FDTC_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "fdtc/errors.hpp"

namespace fdtc {

// Permutation of {0, ..., n-1}, stored as its image table.
// Used both for the strand permutation of a braid and for the sheet
// permutations of a branched covering.
class Permutation {
public:
    explicit Permutation(int n = 0) : image_(n) {
        std::iota(image_.begin(), image_.end(), 0);
    }

    static Permutation from_image(std::vector<int> image) {
        const int n = static_cast<int>(image.size());
        std::vector<char> seen(n, 0);
        for (int v : image) {
            if (v < 0 || v >= n || seen[v])
                throw InternalError("image table is not a bijection");
            seen[v] = 1;
        }
        Permutation p;
        p.image_ = std::move(image);
        return p;
    }

    // Cycle (points[0] points[1] ... points[k-1]) on {0,...,n-1}; every
    // element not listed is fixed.
    static Permutation single_cycle(int n, const std::vector<int>& points) {
        Permutation p(n);
        const int k = static_cast<int>(points.size());
        for (int j = 0; j < k; ++j) {
            int a = points[j];
            int b = points[(j + 1) % k];
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw InternalError("cycle entry out of range");
            p.image_[a] = b;
        }
        // A repeated entry would make the table non-bijective.
        return from_image(p.image_);
    }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[x]; }
    const std::vector<int>& image() const noexcept { return image_; }

    // (p * q)(x) = p(q(x)): q acts first.
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size())
            throw InternalError("composing permutations of different sizes");
        std::vector<int> im(p.size());
        for (int x = 0; x < p.size(); ++x) im[x] = p.image_[q.image_[x]];
        Permutation r;
        r.image_ = std::move(im);
        return r;
    }

    Permutation inverse() const {
        std::vector<int> im(image_.size());
        for (int x = 0; x < size(); ++x) im[image_[x]] = x;
        Permutation r;
        r.image_ = std::move(im);
        return r;
    }

    bool is_identity() const noexcept {
        for (int x = 0; x < size(); ++x)
            if (image_[x] != x) return false;
        return true;
    }

    bool has_fixed_point() const noexcept {
        for (int x = 0; x < size(); ++x)
            if (image_[x] == x) return true;
        return false;
    }

    // Cycles including fixed points, each starting at its minimal element,
    // listed in order of that minimal element.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(image_.size(), 0);
        for (int x = 0; x < size(); ++x) {
            if (seen[x]) continue;
            std::vector<int> cyc;
            for (int y = x; !seen[y]; y = image_[y]) {
                seen[y] = 1;
                cyc.push_back(y);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    int cycle_count() const {
        int count = 0;
        std::vector<char> seen(image_.size(), 0);
        for (int x = 0; x < size(); ++x) {
            if (seen[x]) continue;
            ++count;
            for (int y = x; !seen[y]; y = image_[y]) seen[y] = 1;
        }
        return count;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.image_ == b.image_;
    }

private:
    std::vector<int> image_;
};

} // namespace fdtc

#endif
