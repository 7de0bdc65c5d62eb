#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "alexinv/group.hpp"

namespace alexinv {

/// Word in the Artin braid group B_d; letter +i is sigma_i, -i its inverse
/// (1-based, as in the file format).
struct BraidWord {
    std::size_t strands = 1;
    std::vector<int> letters;

    void validate() const {
        for (std::size_t k = 0; k < letters.size(); ++k) {
            int i = letters[k] < 0 ? -letters[k] : letters[k];
            if (i == 0 || static_cast<std::size_t>(i) >= strands)
                fail(ErrorKind::BadWord, "braid letter " + std::to_string(letters[k]) + " at position " +
                                             std::to_string(k + 1) + " is outside 1.." +
                                             std::to_string(strands == 0 ? 0 : strands - 1));
        }
    }
};

/// Image of a single generator x_g (0-based) under one braid letter.
inline GroupWord artin_letter_image(int letter, std::size_t g) {
    const std::size_t i = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    if (letter > 0) {
        if (g == i) return {{i, 1}, {i + 1, 1}, {i, -1}};
        if (g == i + 1) return {{i, 1}};
    } else {
        if (g == i) return {{i + 1, 1}};
        if (g == i + 1) return {{i + 1, -1}, {i, 1}, {i + 1, 1}};
    }
    return {{g, 1}};
}

/// Right action: letters are applied in order, each as a substitution.
inline GroupWord artin_action(const BraidWord &b, const GroupWord &w) {
    b.validate();
    for (const auto &l : w)
        if (l.gen >= b.strands) fail(ErrorKind::BadWord, "word uses a generator beyond x" + std::to_string(b.strands));
    GroupWord cur = free_reduce(w);
    for (int letter : b.letters) {
        GroupWord next;
        for (const auto &l : cur) {
            GroupWord img = artin_letter_image(letter, l.gen);
            if (l.exp < 0) img = inverse(img);
            next.insert(next.end(), img.begin(), img.end());
        }
        cur = free_reduce(next);
    }
    return cur;
}

struct MonodromyData {
    std::size_t strands = 1;
    std::vector<BraidWord> braids;
    std::vector<std::string> labels; // one label per strand; empty means a single component

    void validate() const {
        for (std::size_t j = 0; j < braids.size(); ++j) {
            if (braids[j].strands != strands)
                fail(ErrorKind::Validation, "braid " + std::to_string(j + 1) + " has a different strand count");
            braids[j].validate();
        }
        if (!labels.empty() && labels.size() != strands)
            fail(ErrorKind::Validation, "labels must cover every strand");
    }

    /// Distinct labels in order of first appearance.
    std::vector<std::string> components() const {
        std::vector<std::string> out;
        for (const auto &l : labels)
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
        if (out.empty()) out.push_back("C");
        return out;
    }
};

inline GroupWord product_word(std::size_t d) {
    GroupWord w;
    for (std::size_t i = 0; i < d; ++i) w.push_back({i, 1});
    return w;
}

/// The ordered product of the braids acts as conjugation by x1...xd.
inline bool full_twist_check(const MonodromyData &m) {
    m.validate();
    const GroupWord p = product_word(m.strands);
    for (std::size_t g = 0; g < m.strands; ++g) {
        GroupWord w{{g, 1}};
        for (const auto &b : m.braids) w = artin_action(b, w);
        GroupWord conj = free_reduce(concat(concat(p, GroupWord{{g, 1}}), inverse(p)));
        if (w != conj) return false;
    }
    return true;
}

enum class VanKampenMode { Affine, Projective };

/// Zariski-van Kampen presentation from braid monodromy data.
inline GroupPresentation vankampen_presentation(const MonodromyData &m, VanKampenMode mode) {
    m.validate();
    const std::size_t d = m.strands;
    const auto comps = m.components();
    std::vector<std::size_t> label_of(d, 0);
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        label_of[i] = static_cast<std::size_t>(std::find(comps.begin(), comps.end(), m.labels[i]) - comps.begin());
    GroupPresentation p;
    p.generators = d;
    for (const auto &b : m.braids)
        for (std::size_t g = 0; g < d; ++g) {
            GroupWord w = artin_action(b, {{g, 1}});
            // The image of x_g is conjugate to its strand's image generator;
            // its label must match.
            GroupWord rel = free_reduce(concat(w, GroupWord{{g, -1}}));
            if (!rel.empty()) p.relators.push_back(std::move(rel));
            std::vector<long> ex(d, 0);
            for (const auto &l : w) ex[l.gen] += l.exp;
            for (std::size_t h = 0; h < d; ++h)
                if (ex[h] != 0 && label_of[h] != label_of[g])
                    fail(ErrorKind::Validation, "component labels are not constant on strand orbits (strands " +
                                                    std::to_string(g + 1) + " and " + std::to_string(h + 1) + ")");
        }
    if (mode == VanKampenMode::Projective) {
        p.relators.push_back(product_word(d));
        // No homomorphism onto Z^r kills x1...xd when every x_i maps to a basis
        // vector; the projective group carries the zero map.
        p.rank = 0;
        p.phi.assign(d, std::vector<long>{});
    } else {
        p.rank = comps.size();
        for (std::size_t g = 0; g < d; ++g) {
            std::vector<long> v(p.rank, 0);
            v[label_of[g]] = 1;
            p.phi.push_back(v);
        }
    }
    p.validate();
    return p;
}

} // namespace alexinv
