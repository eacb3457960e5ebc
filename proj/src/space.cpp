#include "softev/space.hpp"

#include "softev/error.hpp"

#include <unordered_map>

namespace softev {

struct Space::Impl {
    std::string name;
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Space> factors;  // empty, or {left, right}
};


Space::Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Space::Space(std::string name, std::vector<std::string> elements) {
    if (name.empty()) {
        throw ProbError(ErrorKind::InvalidValue, "space needs a name");
    }
    if (elements.empty()) {
        throw ProbError(ErrorKind::InvalidValue, "space '" + name + "' has no elements");
    }
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].empty()) {
            throw ProbError(ErrorKind::InvalidValue, "empty element name in space '" + name + "'");
        }
        if (!impl->index.emplace(elements[i], i).second) {
            throw ProbError(ErrorKind::DuplicateElement,
                            "element '" + elements[i] + "' repeated in space '" + name + "'");
        }
    }
    impl->name = std::move(name);
    impl->elements = std::move(elements);
    impl_ = std::move(impl);
}

Space Space::product(const Space& left, const Space& right) {
    auto impl = std::make_shared<Impl>();
    impl->name = left.name() + "*" + right.name();
    impl->elements.reserve(left.size() * right.size());
    for (const auto& l : left.elements()) {
        for (const auto& r : right.elements()) {
            std::string pair = l + "," + r;
            if (!impl->index.emplace(pair, impl->elements.size()).second) {
                throw ProbError(ErrorKind::DuplicateElement, "product element '" + pair + "' is ambiguous");
            }
            impl->elements.push_back(std::move(pair));
        }
    }
    impl->factors = {left, right};
    return Space(std::shared_ptr<const Impl>(std::move(impl)));
}

const std::string& Space::name() const { return impl_->name; }

std::span<const std::string> Space::elements() const { return impl_->elements; }

std::size_t Space::size() const { return impl_->elements.size(); }

const std::string& Space::element(std::size_t index) const { return impl_->elements.at(index); }

std::optional<std::size_t> Space::find(std::string_view element) const {
    auto it = impl_->index.find(std::string(element));
    if (it == impl_->index.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Space::index_of(std::string_view element) const {
    if (auto index = find(element)) {
        return *index;
    }
    throw ProbError(ErrorKind::UnknownElement,
                    "'" + std::string(element) + "' is not an element of space '" + name() + "'");
}

bool Space::is_product() const { return !impl_->factors.empty(); }

const Space& Space::left() const {
    if (!is_product()) {
        throw ProbError(ErrorKind::NotAProductSpace, "space '" + name() + "' is not a product");
    }
    return impl_->factors[0];
}

const Space& Space::right() const {
    if (!is_product()) {
        throw ProbError(ErrorKind::NotAProductSpace, "space '" + name() + "' is not a product");
    }
    return impl_->factors[1];
}

std::size_t Space::pair_index(std::size_t left_index, std::size_t right_index) const {
    return left_index * right().size() + right_index;
}

bool operator==(const Space& a, const Space& b) {
    if (a.impl_ == b.impl_) {
        return true;
    }
    return a.impl_->name == b.impl_->name && a.impl_->elements == b.impl_->elements;
}

void require_same_space(const Space& expected, const Space& actual, std::string_view what) {
    if (!(expected == actual)) {
        throw ProbError(ErrorKind::SpaceMismatch, std::string(what) + ": expected space '" +
                                                      expected.name() + "', got '" + actual.name() + "'");
    }
}

}  // namespace softev
