#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cm2/errors.hpp"

namespace cm2 {

/// Ordered set of variable names. The order is fixed at construction and
/// defines the canonical order of every monomial over the set. Instances are
/// immutable and shared between monomials through a shared_ptr handle.
class VariableSet {
public:
    /// Names must be pairwise distinct, non-empty, distinct from "1" and free
    /// of '*', '^' and whitespace (the monomial grammar reserves those).
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t index) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::span<const std::string> names() const { return names_; }

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string_view, std::size_t> index_;
};

using VarSet = std::shared_ptr<const VariableSet>;

VarSet make_variables(std::vector<std::string> names);

/// x1, x2, ..., xn
VarSet standard_variables(std::size_t n);

/// True when both handles denote the same variable set (pointer fast path,
/// deep comparison fallback).
bool same_variables(const VarSet& a, const VarSet& b);

/// A monomial over a fixed VariableSet, stored as a sparse exponent vector
/// sorted by variable index. All stored exponents are >= 1; the unit monomial
/// has an empty vector. Exponents are 64-bit and every arithmetic step is
/// overflow-checked, so values can never silently wrap.
class Monomial {
public:
    using Exponents = std::vector<std::pair<std::size_t, std::int64_t>>;

    static Monomial one(VarSet vars);
    static Monomial var(VarSet vars, std::size_t index, std::int64_t exponent = 1);

    /// Entries may come in any order and may repeat (repeats are merged by
    /// checked addition); zero exponents are dropped, negative ones rejected.
    Monomial(VarSet vars, Exponents exponents);

    const VarSet& variables() const { return vars_; }
    bool is_one() const { return exps_.empty(); }
    std::int64_t exponent(std::size_t var_index) const;
    std::int64_t degree() const;
    std::span<const std::pair<std::size_t, std::int64_t>> exponents() const { return exps_; }

    bool operator==(const Monomial& other) const;
    /// Canonical total order used for sorting and as a map key; compares the
    /// sparse exponent vectors lexicographically.
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    Monomial(VarSet vars, Exponents exps, int /*trusted*/) : vars_(std::move(vars)), exps_(std::move(exps)) {}

    VarSet vars_;
    Exponents exps_;

    friend Monomial operator*(const Monomial&, const Monomial&);
    friend Monomial gcd(const Monomial&, const Monomial&);
    friend Monomial lcm(const Monomial&, const Monomial&);
    friend bool divides(const Monomial&, const Monomial&);
    friend Monomial divide_exact(const Monomial&, const Monomial&);
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Componentwise minimum of exponents.
Monomial gcd(const Monomial& a, const Monomial& b);

/// Componentwise maximum of exponents.
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff a divides b (componentwise <=).
bool divides(const Monomial& a, const Monomial& b);

/// a / b; throws PreconditionError unless b divides a.
Monomial divide_exact(const Monomial& a, const Monomial& b);

/// True iff gcd(a, b) is the unit.
bool is_coprime(const Monomial& a, const Monomial& b);

/// Canonical text form: "1" for the unit, otherwise terms "name" or
/// "name^e" joined by '*' in variable-set order.
std::string format(const Monomial& m);

/// Parses the grammar  term ("*" term)*  with  term = name ("^" posint)?,
/// or the literal "1". Unknown names and malformed exponents raise
/// ParseError carrying the offending position.
Monomial parse_monomial(const VarSet& vars, std::string_view text);

}  // namespace cm2
