#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rickard/bigrade.hpp"
#include "rickard/tensor_model.hpp"
#include "rickard/weight.hpp"

namespace rickard {

/// One divided-power letter E_i^(a) or F_i^(a), a >= 1.
struct Letter {
    Generator kind = Generator::E;
    int node = 1;
    int power = 1;

    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/**
 * Weights allowed to be nonempty in sl_2 mode: either everything or the
 * symmetric range |lambda| <= bound.
 */
class Window {
public:
    static Window unbounded() { return Window{}; }
    static Window symmetric(int bound);
    /// "", "none" -> unbounded; "3" -> |lambda| <= 3; "{-2,0,2}" or "[-2,2]"
    /// with symmetric extremes. Anything else is a ParseError.
    static Window parse(std::string_view text);

    bool isBounded() const noexcept { return bound_.has_value(); }
    std::optional<int> bound() const noexcept { return bound_; }
    bool contains(int lambda) const noexcept { return !bound_ || (lambda <= *bound_ && -lambda <= *bound_); }
    std::string toString() const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::optional<int> bound_;
};

/**
 * A composable word of letters applied right to left (letters()[0] acts
 * last), anchored at a source weight. In sl_2 mode the source is the
 * integer pairing lambda and every letter sits on node 1; otherwise the
 * source is a composition and the word is dead once a running weight has
 * a negative entry.
 */
class KernelWord {
public:
    KernelWord() = default;
    KernelWord(int sl2Source, std::vector<Letter> letters);
    KernelWord(Weight source, std::vector<Letter> letters);

    bool isSl2() const noexcept { return sl2_; }
    int sl2Source() const;
    const Weight& composition() const;
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool isIdentity() const noexcept { return letters_.empty(); }

    /// Running sl_2 weights: source first, then after each letter (right to left).
    std::vector<int> sl2Trajectory() const;
    /// Running compositions, same order.
    std::vector<Weight> trajectory() const;
    int sl2Target() const;
    Weight compositionTarget() const;

    /// Dead words are zero: some running weight is outside the window (sl_2)
    /// or has a negative entry (compositions).
    bool isDead(const Window& window) const;

    /// Same source, new letters.
    KernelWord withLetters(std::vector<Letter> letters) const;
    /// (*this) after rhs; requires this->source == rhs.target.
    KernelWord after(const KernelWord& rhs) const;
    /// Same anchoring as this word, no letters.
    KernelWord identityAtSource() const { return withLetters({}); }

    /// "F^(1)E^(1)" in sl_2 mode, "F2^(1)E1^(1)" otherwise, "id" if empty.
    std::string toString() const;
    /// Source rendered as "0" or "(2,1,0)".
    std::string sourceString() const;
    int totalPower() const;

    friend auto operator<=>(const KernelWord&, const KernelWord&) = default;
    friend bool operator==(const KernelWord&, const KernelWord&) = default;

private:
    bool sl2_ = true;
    int lambda_ = 0;
    Weight composition_;
    std::vector<Letter> letters_;
};

/// Letter syntax: E, F, E1, F2^(3); whitespace optional between letters; "id" is empty.
std::vector<Letter> parseLetters(std::string_view text);
/// Integer weight -> sl_2 word, "(a,b,...)" -> composition word.
KernelWord parseWord(std::string_view letters, std::string_view weight);

/// Direct sum of words sharing source and target, with positive bigraded multiplicities.
class FormalSum {
public:
    FormalSum() = default;
    void add(const KernelWord& word, const BiGrade& multiplicity);
    FormalSum& operator+=(const FormalSum& rhs);
    FormalSum scaled(const BiGrade& factor) const;

    bool isZero() const noexcept { return terms_.empty(); }
    const std::map<KernelWord, BiGrade>& terms() const noexcept { return terms_; }
    BiGrade multiplicity(const KernelWord& word) const;

    /// "⟨g h^-1 + g^-1 h⟩·F^(1)E^(1) ⊕ 1·id", longest words first. A bare
    /// integer multiplicity is written without brackets.
    std::string toString() const;

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    std::map<KernelWord, BiGrade> terms_;
};

}  // namespace rickard
