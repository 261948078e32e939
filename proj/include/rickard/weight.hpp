#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rickard {

/**
 * An sl_m weight written as a composition (lambda_1, ..., lambda_m) of N.
 *
 * Nodes are 1-based, 1..m-1. The simple root alpha_i is (0,..,-1,+1,..,0) with
 * the -1 in slot i, and the pairing with alpha_i is lambda_{i+1} - lambda_i, so
 * for m = 2 the pairing of (k, N-k) is the familiar N - 2k.
 *
 * Intermediate weights of a computation may leave the composition cone
 * (negative entries); isComposition() tells the two apart.
 */
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts) : parts_(std::move(parts)) {}

    int rank() const noexcept { return static_cast<int>(parts_.size()); }  // m
    int total() const noexcept;                                            // N
    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(int slot) const { return parts_.at(static_cast<std::size_t>(slot - 1)); }

    bool isComposition() const noexcept;
    /// lambda_{i+1} - lambda_i.
    int pairing(int node) const;
    /// lambda + times * alpha_i.
    Weight shifted(int node, int times) const;
    /// s_i(lambda): swap slots i and i+1.
    Weight reflected(int node) const;

    /// "(2,1,0)"
    std::string toString() const;
    static Weight parse(std::string_view text);

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    void checkNode(int node) const;
    std::vector<int> parts_;
};

/// The composition (k, N-k) whose sl_2 pairing is lambda; requires
/// |lambda| <= N and lambda = N mod 2.
Weight sl2Weight(int lambda, int total);

}  // namespace rickard
