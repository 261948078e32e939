#include "rickard/weight.hpp"

#include <cctype>
#include <numeric>

#include "rickard/errors.hpp"

namespace rickard {

int Weight::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Weight::isComposition() const noexcept {
    for (int p : parts_) {
        if (p < 0) return false;
    }
    return true;
}

void Weight::checkNode(int node) const {
    if (node < 1 || node >= rank()) {
        throw InvalidArgument("node " + std::to_string(node) + " out of range for rank " +
                              std::to_string(rank()));
    }
}

int Weight::pairing(int node) const {
    checkNode(node);
    return parts_[static_cast<std::size_t>(node)] - parts_[static_cast<std::size_t>(node - 1)];
}

Weight Weight::shifted(int node, int times) const {
    checkNode(node);
    Weight r = *this;
    r.parts_[static_cast<std::size_t>(node - 1)] -= times;
    r.parts_[static_cast<std::size_t>(node)] += times;
    return r;
}

Weight Weight::reflected(int node) const {
    checkNode(node);
    Weight r = *this;
    std::swap(r.parts_[static_cast<std::size_t>(node - 1)], r.parts_[static_cast<std::size_t>(node)]);
    return r;
}

std::string Weight::toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Weight Weight::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("weight must start with '('", pos);
    ++pos;
    std::vector<int> parts;
    while (true) {
        skip();
        int sign = 1;
        if (pos < text.size() && text[pos] == '-') {
            sign = -1;
            ++pos;
        }
        const std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) throw ParseError("weight entry too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected integer in weight", pos);
        parts.push_back(sign * static_cast<int>(value));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        throw ParseError("expected ',' or ')' in weight", pos);
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing characters after weight", pos);
    if (parts.size() < 2) throw ParseError("weight needs at least two entries", 0);
    return Weight(std::move(parts));
}

Weight sl2Weight(int lambda, int total) {
    if (total < 0 || lambda > total || lambda < -total || (total - lambda) % 2 != 0) {
        throw InvalidArgument("sl2 weight " + std::to_string(lambda) + " not realized in N=" +
                              std::to_string(total));
    }
    const int k = (total - lambda) / 2;
    return Weight({k, total - k});
}

}  // namespace rickard
