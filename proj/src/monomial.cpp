#include "cm2/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cm2 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw UsageError("monomial exponent overflow");
    return r;
}

void require_same_vars(const Monomial& a, const Monomial& b) {
    if (!same_variables(a.variables(), b.variables()))
        throw UsageError("monomials live over different variable sets");
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty() || n == "1")
            throw UsageError("invalid variable name '" + n + "'");
        for (char c : n)
            if (c == '*' || c == '^' || std::isspace(static_cast<unsigned char>(c)))
                throw UsageError("variable name '" + n + "' contains a reserved character");
        if (!index_.emplace(names_[i], i).second)
            throw UsageError("duplicate variable name '" + n + "'");
    }
}

const std::string& VariableSet::name(std::size_t index) const {
    if (index >= names_.size())
        throw UsageError("variable index out of range");
    return names_[index];
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VarSet make_variables(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

VarSet standard_variables(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return make_variables(std::move(names));
}

bool same_variables(const VarSet& a, const VarSet& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

Monomial Monomial::one(VarSet vars) { return Monomial(std::move(vars), {}, 0); }

Monomial Monomial::var(VarSet vars, std::size_t index, std::int64_t exponent) {
    return Monomial(std::move(vars), {{index, exponent}});
}

Monomial::Monomial(VarSet vars, Exponents exponents) : vars_(std::move(vars)) {
    if (!vars_)
        throw UsageError("monomial requires a variable set");
    std::sort(exponents.begin(), exponents.end());
    for (auto& [idx, e] : exponents) {
        if (idx >= vars_->size())
            throw UsageError("variable index out of range");
        if (e < 0)
            throw UsageError("negative exponent");
        if (e == 0)
            continue;
        if (!exps_.empty() && exps_.back().first == idx)
            exps_.back().second = checked_add(exps_.back().second, e);
        else
            exps_.emplace_back(idx, e);
    }
}

std::int64_t Monomial::exponent(std::size_t var_index) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), var_index,
                               [](const auto& p, std::size_t v) { return p.first < v; });
    return (it != exps_.end() && it->first == var_index) ? it->second : 0;
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (const auto& [idx, e] : exps_)
        d = checked_add(d, e);
    return d;
}

bool Monomial::operator==(const Monomial& other) const {
    return same_variables(vars_, other.vars_) && exps_ == other.exps_;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    const std::size_t n = std::min(exps_.size(), other.exps_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (auto c = exps_[k].first <=> other.exps_[k].first; c != 0)
            return c;
        if (auto c = exps_[k].second <=> other.exps_[k].second; c != 0)
            return c;
    }
    return exps_.size() <=> other.exps_.size();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial::Exponents out;
    out.reserve(a.exps_.size() + b.exps_.size());
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() && j != b.exps_.end()) {
        if (i->first < j->first)
            out.push_back(*i++);
        else if (j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, checked_add(i->second, j->second));
            ++i, ++j;
        }
    }
    out.insert(out.end(), i, a.exps_.end());
    out.insert(out.end(), j, b.exps_.end());
    return Monomial(a.vars_, std::move(out), 0);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial::Exponents out;
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() && j != b.exps_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            out.emplace_back(i->first, std::min(i->second, j->second));
            ++i, ++j;
        }
    }
    return Monomial(a.vars_, std::move(out), 0);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial::Exponents out;
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() && j != b.exps_.end()) {
        if (i->first < j->first)
            out.push_back(*i++);
        else if (j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, std::max(i->second, j->second));
            ++i, ++j;
        }
    }
    out.insert(out.end(), i, a.exps_.end());
    out.insert(out.end(), j, b.exps_.end());
    return Monomial(a.vars_, std::move(out), 0);
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    auto i = a.exps_.begin();
    auto j = b.exps_.begin();
    for (; i != a.exps_.end(); ++i) {
        while (j != b.exps_.end() && j->first < i->first)
            ++j;
        if (j == b.exps_.end() || j->first != i->first || j->second < i->second)
            return false;
    }
    return true;
}

Monomial divide_exact(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    if (!divides(b, a))
        throw PreconditionError("exact division by a non-divisor");
    Monomial::Exponents out;
    auto j = b.exps_.begin();
    for (const auto& [idx, e] : a.exps_) {
        std::int64_t sub = 0;
        while (j != b.exps_.end() && j->first < idx)
            ++j;
        if (j != b.exps_.end() && j->first == idx)
            sub = j->second;
        if (e - sub > 0)
            out.emplace_back(idx, e - sub);
    }
    return Monomial(a.variables(), std::move(out));
}

bool is_coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

std::string format(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string out;
    bool first = true;
    for (const auto& [idx, e] : m.exponents()) {
        if (!first)
            out += '*';
        first = false;
        out += m.variables()->name(idx);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

Monomial parse_monomial(const VarSet& vars, std::string_view text) {
    if (!vars)
        throw UsageError("parse_monomial requires a variable set");
    if (text == "1")
        return Monomial::one(vars);
    if (text.empty())
        throw ParseError("empty monomial", 0);

    Monomial::Exponents exps;
    std::size_t pos = 0;
    while (true) {
        std::size_t name_start = pos;
        while (pos < text.size() && text[pos] != '^' && text[pos] != '*')
            ++pos;
        std::string_view name = text.substr(name_start, pos - name_start);
        if (name.empty())
            throw ParseError("expected a variable name", name_start);
        auto idx = vars->index_of(name);
        if (!idx)
            throw ParseError("unknown variable '" + std::string(name) + "'", name_start);

        std::int64_t exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            std::size_t exp_start = ++pos;
            while (pos < text.size() && text[pos] != '*')
                ++pos;
            std::string_view digits = text.substr(exp_start, pos - exp_start);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || exponent < 1)
                throw ParseError("malformed exponent", exp_start);
        }
        exps.emplace_back(*idx, exponent);

        if (pos == text.size())
            break;
        // text[pos] == '*'
        ++pos;
        if (pos == text.size())
            throw ParseError("dangling '*'", pos - 1);
    }
    return Monomial(vars, std::move(exps));
}

}  // namespace cm2
