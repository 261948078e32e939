#include "rickard/kernel_word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rickard/errors.hpp"

namespace rickard {

namespace {

std::string trimmed(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

int parseInt(std::string_view s, std::size_t& pos, std::size_t offset) {
    const std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    long long v = 0;
    const std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1000000) throw ParseError("integer too large", offset + start);
        ++pos;
    }
    if (pos == digits) throw ParseError("expected an integer", offset + start);
    return static_cast<int>(neg ? -v : v);
}

}  // namespace

Window Window::symmetric(int bound) {
    if (bound < 0) throw InvalidArgument("window bound must be >= 0");
    Window w;
    w.bound_ = bound;
    return w;
}

Window Window::parse(std::string_view text) {
    const std::string t = trimmed(text);
    if (t.empty() || t == "none" || t == "all") return unbounded();
    std::size_t pos = 0;
    if (t.front() != '{' && t.front() != '[') {
        const int b = parseInt(t, pos, 0);
        if (pos != t.size()) throw ParseError("unexpected text after window bound", pos);
        if (b < 0) throw ParseError("window bound must be >= 0", 0);
        return symmetric(b);
    }
    const char close = t.front() == '{' ? '}' : ']';
    pos = 1;
    std::vector<int> values;
    while (true) {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
        values.push_back(parseInt(t, pos, 0));
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos < t.size() && t[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < t.size() && t[pos] == close) {
            ++pos;
            break;
        }
        throw ParseError(std::string("expected ',' or '") + close + "'", pos);
    }
    if (pos != t.size()) throw ParseError("unexpected text after window", pos);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo != -*hi) throw ParseError("window must be symmetric about 0, got " + t, 0);
    if (close == ']' && values.size() != 2) throw ParseError("interval window needs two endpoints", 0);
    if (close == '}') {
        // a listed set must be the full parity class between the extremes
        std::set<int> listed(values.begin(), values.end());
        for (int v = *lo; v <= *hi; v += 2) {
            if (!listed.count(v)) throw ParseError("window set skips " + std::to_string(v), 0);
        }
    }
    return symmetric(*hi);
}

std::string Window::toString() const { return bound_ ? "|l|<=" + std::to_string(*bound_) : "unbounded"; }

KernelWord::KernelWord(int sl2Source, std::vector<Letter> letters) : sl2_(true), lambda_(sl2Source) {
    for (const auto& l : letters) {
        if (l.node != 1) throw InvalidArgument("sl2 word with a letter on node " + std::to_string(l.node));
        if (l.power < 0) throw InvalidArgument("negative divided power");
        if (l.power > 0) letters_.push_back(l);
    }
}

KernelWord::KernelWord(Weight source, std::vector<Letter> letters) : sl2_(false), composition_(std::move(source)) {
    for (const auto& l : letters) {
        if (l.node < 1 || l.node >= composition_.rank()) {
            throw InvalidArgument("letter node " + std::to_string(l.node) + " out of range for weight " +
                                  composition_.toString());
        }
        if (l.power < 0) throw InvalidArgument("negative divided power");
        if (l.power > 0) letters_.push_back(l);
    }
}

int KernelWord::sl2Source() const {
    if (!sl2_) throw InvalidArgument("sl2Source on a composition word");
    return lambda_;
}

const Weight& KernelWord::composition() const {
    if (sl2_) throw InvalidArgument("composition on an sl2 word");
    return composition_;
}

std::vector<int> KernelWord::sl2Trajectory() const {
    std::vector<int> out{sl2Source()};
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(out.back() + (it->kind == Generator::E ? 2 : -2) * it->power);
    }
    return out;
}

std::vector<Weight> KernelWord::trajectory() const {
    std::vector<Weight> out{composition()};
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(out.back().shifted(it->node, it->kind == Generator::E ? it->power : -it->power));
    }
    return out;
}

int KernelWord::sl2Target() const { return sl2Trajectory().back(); }
Weight KernelWord::compositionTarget() const { return trajectory().back(); }

bool KernelWord::isDead(const Window& window) const {
    if (sl2_) {
        for (int w : sl2Trajectory()) {
            if (!window.contains(w)) return true;
        }
        return false;
    }
    for (const auto& w : trajectory()) {
        if (!w.isComposition()) return true;
    }
    return false;
}

KernelWord KernelWord::withLetters(std::vector<Letter> letters) const {
    return sl2_ ? KernelWord(lambda_, std::move(letters)) : KernelWord(composition_, std::move(letters));
}

KernelWord KernelWord::after(const KernelWord& rhs) const {
    if (sl2_ != rhs.sl2_) throw InvalidArgument("composing an sl2 word with a composition word");
    const bool matches = sl2_ ? lambda_ == rhs.sl2Target() : composition_ == rhs.compositionTarget();
    if (!matches) {
        throw InvalidArgument("cannot compose: source " + sourceString() + " differs from target of " +
                              rhs.toString() + " at " + rhs.sourceString());
    }
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return rhs.withLetters(std::move(joined));
}

std::string KernelWord::toString() const {
    if (letters_.empty()) return "id";
    std::string out;
    for (const auto& l : letters_) {
        out += l.kind == Generator::E ? 'E' : 'F';
        if (!sl2_) out += std::to_string(l.node);
        out += "^(" + std::to_string(l.power) + ")";
    }
    return out;
}

std::string KernelWord::sourceString() const { return sl2_ ? std::to_string(lambda_) : composition_.toString(); }

int KernelWord::totalPower() const {
    int n = 0;
    for (const auto& l : letters_) n += l.power;
    return n;
}

std::vector<Letter> parseLetters(std::string_view text) {
    std::vector<Letter> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (text.substr(pos, 2) == "id") {
        pos += 2;
        skip();
        if (pos != text.size()) throw ParseError("unexpected text after 'id'", pos);
        return out;
    }
    if (pos == text.size()) throw ParseError("empty word (write 'id' for the identity)", pos);
    while (pos < text.size()) {
        Letter l;
        if (text[pos] == 'E') {
            l.kind = Generator::E;
        } else if (text[pos] == 'F') {
            l.kind = Generator::F;
        } else {
            throw ParseError("expected 'E' or 'F'", pos);
        }
        ++pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            l.node = parseInt(text, pos, 0);
            if (l.node < 1) throw ParseError("node must be >= 1", pos);
        }
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' after '^'", pos);
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("expected a divided power", pos);
            }
            l.power = parseInt(text, pos, 0);
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
        }
        out.push_back(l);
        skip();
    }
    return out;
}

KernelWord parseWord(std::string_view letters, std::string_view weight) {
    const std::string w = trimmed(weight);
    auto parsed = parseLetters(letters);
    if (!w.empty() && w.front() == '(') return KernelWord(Weight::parse(w), std::move(parsed));
    std::size_t pos = 0;
    const int lambda = parseInt(w, pos, 0);
    if (pos != w.size()) throw ParseError("unexpected text after weight", pos);
    return KernelWord(lambda, std::move(parsed));
}

void FormalSum::add(const KernelWord& word, const BiGrade& multiplicity) {
    if (multiplicity.isZero()) return;
    terms_[word] += multiplicity;
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
    for (const auto& [w, m] : rhs.terms_) add(w, m);
    return *this;
}

FormalSum FormalSum::scaled(const BiGrade& factor) const {
    FormalSum out;
    for (const auto& [w, m] : terms_) out.add(w, m * factor);
    return out;
}

BiGrade FormalSum::multiplicity(const KernelWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? BiGrade{} : it->second;
}

std::string FormalSum::toString() const {
    if (terms_.empty()) return "0";
    std::vector<const KernelWord*> words;
    for (const auto& [w, m] : terms_) words.push_back(&w);
    std::stable_sort(words.begin(), words.end(), [](const KernelWord* a, const KernelWord* b) {
        if (a->totalPower() != b->totalPower()) return a->totalPower() > b->totalPower();
        return a->toString() < b->toString();
    });
    std::ostringstream os;
    bool first = true;
    for (const KernelWord* w : words) {
        const BiGrade& m = terms_.at(*w);
        if (!first) os << " ⊕ ";
        first = false;
        const bool bare = m.terms().size() == 1 && m.terms().begin()->first == BiGrade::Key{0, 0};
        if (bare) {
            os << m.terms().begin()->second;
        } else {
            os << "⟨" << m.toString() << "⟩";
        }
        os << "·" << w->toString();
    }
    return os.str();
}

}  // namespace rickard
