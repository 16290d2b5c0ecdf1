#include "ssk3/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssk3 {

namespace {

int top_bit(Mask m) { return 63 - std::countl_zero(m); }

}  // namespace

Code::Code(int n, const std::vector<Mask>& generators) : n_(n) {
    if (n < 0 || n > 64) throw std::invalid_argument("code length must be in 0..64");
    for (Mask g : generators) {
        if (g & ~full_mask(n)) throw std::invalid_argument("generator exceeds code length");
        Mask r = reduce(g);
        if (!r) continue;
        int t = top_bit(r);
        for (Mask& b : basis_)
            if ((b >> t) & 1U) b ^= r;
        basis_.push_back(r);
        std::sort(basis_.begin(), basis_.end(), std::greater<>());
    }
}

Mask Code::reduce(Mask w) const {
    for (Mask b : basis_)
        if ((w >> top_bit(b)) & 1U) w ^= b;
    return w;
}

bool Code::contains(Mask w) const { return reduce(w) == 0; }

std::vector<Mask> Code::words() const {
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << basis_.size());
    Mask cur = 0;
    out.push_back(cur);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis_.size()); ++i) {
        cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(cur);
    }
    return out;
}

std::vector<int> Code::weight_enumerator() const {
    std::vector<int> a(static_cast<std::size_t>(n_) + 1, 0);
    for (Mask w : words()) ++a[static_cast<std::size_t>(std::popcount(w))];
    return a;
}

}  // namespace ssk3
