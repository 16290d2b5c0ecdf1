#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ssk3/code.hpp"
#include "ssk3/zlocus.hpp"

// Maps published point labels (orbit representatives and their Frobenius
// images) to indices in a computed ZLocus.
struct LabelMap {
    std::vector<int> index;  // label -> locus index

    void add_orbit(const ssk3::ZLocus& z, const ssk3::Point3& p, int length) {
        auto it = std::find(z.points.begin(), z.points.end(), p);
        if (it == z.points.end()) throw std::runtime_error("representative not in locus");
        int i = static_cast<int>(it - z.points.begin());
        for (int k = 0; k < length; ++k, i = z.frobenius_perm[i]) index.push_back(i);
    }
    ssk3::Mask mask(const std::vector<int>& labels) const {
        ssk3::Mask m = 0;
        for (int l : labels) m |= ssk3::Mask{1} << index.at(l);
        return m;
    }
};
