#ifndef ITDUAL_GROUND_SET_HPP
#define ITDUAL_GROUND_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace itdual {

// Nonempty subsets of the ground set are bitmasks 1 .. 2^n-1; bit i refers to
// the i-th ground label. The empty set (mask 0) is never stored as a key and
// stands for H() = 0 wherever it shows up in a formula.
using Mask = std::uint32_t;

int popcount(Mask m);

class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    // Parses "A,B,C" or a run of single uppercase letters like "ABC".
    static GroundSet from_text(const std::string& text);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    bool contains(const std::string& label) const;
    int index_of(const std::string& label) const;  // throws on unknown label

    Mask full_mask() const { return (Mask(1) << labels_.size()) - 1; }
    Mask singleton(int i) const { return Mask(1) << i; }

    Mask mask_of(const std::vector<std::string>& subset) const;
    std::vector<std::string> labels_of(Mask m) const;

    // Subset rendering used in JSON keys and printed reports: labels joined
    // in ground order, concatenated when every label is a single character
    // ("ACD"), comma-separated otherwise.
    std::string subset_name(Mask m) const;

    // New ground set with `fresh` appended. Throws if the label collides.
    GroundSet extended(const std::string& fresh) const;

    // New ground set with variable i removed.
    GroundSet without(int i) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
};

// A label is an identifier: leading letter, then letters/digits/underscore.
bool is_valid_label(const std::string& label);

}

#endif
