#include "repsets/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace repsets {

IntegerSet::IntegerSet(std::vector<Int> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 0)
        throw std::invalid_argument("IntegerSet: negative element");
}

IntegerSet IntegerSet::interval(Int lo, Int hi) {
    std::vector<Int> v;
    for (Int x = std::max<Int>(lo, 0); x <= hi; ++x) v.push_back(x);
    return IntegerSet(std::move(v));
}

bool IntegerSet::contains(Int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

Int IntegerSet::min_element() const {
    if (elems_.empty()) throw std::invalid_argument("IntegerSet: min of empty set");
    return elems_.front();
}

Int IntegerSet::max_element() const {
    if (elems_.empty()) throw std::invalid_argument("IntegerSet: max of empty set");
    return elems_.back();
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
    std::vector<Int> sums;
    sums.reserve(a.size() * b.size());
    for (Int x : a)
        for (Int y : b) sums.push_back(x + y);
    return IntegerSet(std::move(sums));
}

IntegerSet translate(Int b, const IntegerSet& a) {
    if (b < 0) throw std::invalid_argument("translate: negative offset");
    std::vector<Int> v;
    v.reserve(a.size());
    for (Int x : a) v.push_back(b + x);
    return IntegerSet(std::move(v));
}

IntegerSet dilate_naturals(Int q, Int bound) {
    if (q < 1) throw std::invalid_argument("dilate_naturals: factor must be >= 1");
    std::vector<Int> v;
    for (Int x = 0; x <= bound; x += q) v.push_back(x);
    return IntegerSet(std::move(v));
}

IntegerSet set_union(const IntegerSet& a, const IntegerSet& b) {
    std::vector<Int> v;
    v.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return IntegerSet(std::move(v));
}

IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b) {
    std::vector<Int> v;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return IntegerSet(std::move(v));
}

std::string to_string(const IntegerSet& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    return out.str();
}

IntegerSet parse_integer_set(const std::string& text) {
    std::vector<Int> v;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream ws(token);
        std::string word;
        while (ws >> word) {
            Int value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                throw std::invalid_argument("parse_integer_set: bad token '" + word + "'");
            v.push_back(value);
        }
    }
    return IntegerSet(std::move(v));
}

} // namespace repsets
