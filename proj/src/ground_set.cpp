#include "itdual/ground_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace itdual {

namespace {

// Dense point vectors are 2^n - 1 long; this keeps masks inside 32 bits with
// headroom and fails loudly rather than silently overflowing.
constexpr int kMaxVariables = 26;

}

int popcount(Mask m)
{
    return std::popcount(m);
}

bool is_valid_label(const std::string& label)
{
    if (label.empty() || !std::isalpha(static_cast<unsigned char>(label[0])))
        return false;
    return std::all_of(label.begin(), label.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.empty())
        throw std::invalid_argument("ground set must contain at least one variable");
    if (labels_.size() > kMaxVariables)
        throw std::invalid_argument("too many variables (max 26)");
    for (const auto& label : labels_) {
        if (!is_valid_label(label))
            throw std::invalid_argument("invalid variable label '" + label + "'");
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate variable label in ground set");
}

GroundSet GroundSet::from_text(const std::string& text)
{
    std::vector<std::string> labels;
    if (text.find(',') == std::string::npos &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return std::isupper(static_cast<unsigned char>(c)); })) {
        for (char c : text)
            labels.emplace_back(1, c);
    } else {
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            // trim surrounding blanks
            size_t a = item.find_first_not_of(" \t");
            size_t b = item.find_last_not_of(" \t");
            if (a == std::string::npos)
                throw std::invalid_argument("empty label in list '" + text + "'");
            labels.push_back(item.substr(a, b - a + 1));
        }
    }
    return GroundSet(std::move(labels));
}

bool GroundSet::contains(const std::string& label) const
{
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int GroundSet::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::invalid_argument("unknown variable '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

Mask GroundSet::mask_of(const std::vector<std::string>& subset) const
{
    Mask m = 0;
    for (const auto& label : subset)
        m |= singleton(index_of(label));
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const
{
    if (m > full_mask())
        throw std::invalid_argument("subset mask outside ground set");
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (m & singleton(i))
            out.push_back(labels_[i]);
    return out;
}

std::string GroundSet::subset_name(Mask m) const
{
    auto parts = labels_of(m);
    bool single_chars = std::all_of(labels_.begin(), labels_.end(),
                                    [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i && !single_chars)
            out += ',';
        out += parts[i];
    }
    return out;
}

GroundSet GroundSet::extended(const std::string& fresh) const
{
    if (contains(fresh))
        throw std::invalid_argument("label '" + fresh + "' already in ground set");
    auto labels = labels_;
    labels.push_back(fresh);
    return GroundSet(std::move(labels));
}

GroundSet GroundSet::without(int i) const
{
    if (i < 0 || i >= size())
        throw std::invalid_argument("variable index out of range");
    auto labels = labels_;
    labels.erase(labels.begin() + i);
    return GroundSet(std::move(labels));
}

}
