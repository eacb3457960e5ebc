#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace softev {

/// A named finite sample space with a fixed element order.
///
/// Two spaces are the same space iff they agree on name and element list;
/// a {t,~t} test space is never confused with some other two-element space.
/// Binary products carry their factors so marginals can be taken; n-ary
/// products nest to the left. A product element is written "l,r".
class Space {
public:
    Space(std::string name, std::vector<std::string> elements);

    static Space product(const Space& left, const Space& right);

    const std::string& name() const;
    std::span<const std::string> elements() const;
    std::size_t size() const;
    const std::string& element(std::size_t index) const;

    std::optional<std::size_t> find(std::string_view element) const;
    /// Throws ProbError(UnknownElement).
    std::size_t index_of(std::string_view element) const;

    bool is_product() const;
    /// Throw ProbError(NotAProductSpace) on a plain space.
    const Space& left() const;
    const Space& right() const;
    /// Index in this product of the pair (left index, right index).
    std::size_t pair_index(std::size_t left_index, std::size_t right_index) const;

    friend bool operator==(const Space& a, const Space& b);

private:
    struct Impl;
    explicit Space(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Throws ProbError(SpaceMismatch) naming `what` when the spaces differ.
void require_same_space(const Space& expected, const Space& actual, std::string_view what);

}  // namespace softev
