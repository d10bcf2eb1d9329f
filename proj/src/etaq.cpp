#include "betaq/etaq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "betaq/errors.hpp"
#include "detail/int_series.hpp"

namespace betaq {

namespace {

std::string trim(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

long parse_long(const std::string& s, std::string_view whole) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad integer '" + s + "' in eta quotient '" + std::string(whole) + "'");
    }
}

void parse_product(std::string part, int sign, std::map<long, long>& out, std::string_view whole) {
    if (!part.empty() && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    if (part.empty()) throw UsageError("empty factor list in '" + std::string(whole) + "'");
    if (part == "1" && sign > 0) return;   // "1/..." is an empty numerator; a "1" divisor is eta(tau)
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw UsageError("empty factor in '" + std::string(whole) + "'");
        auto caret = tok.find('^');
        long delta = parse_long(tok.substr(0, caret), whole);
        long e = caret == std::string::npos ? 1 : parse_long(tok.substr(caret + 1), whole);
        out[delta] += sign * e;
    }
}

} // namespace

EtaQuotient::EtaQuotient(long level, std::map<long, long> factors) : level_(level) {
    if (level < 1) throw Error("eta quotient level must be positive");
    for (auto [delta, r] : factors) {
        if (delta < 1) throw Error("eta quotient scale must be positive");
        if (level % delta != 0)
            throw Error("scale " + std::to_string(delta) + " does not divide level " + std::to_string(level));
        if (r != 0) factors_.emplace(delta, r);
    }
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
    std::string s = trim(text);
    long level = 0;
    if (auto at = s.find('@'); at != std::string::npos) {
        level = parse_long(s.substr(at + 1), text);
        s = s.substr(0, at);
    }
    std::map<long, long> factors;
    auto slash = s.find('/');
    parse_product(s.substr(0, slash), +1, factors, text);
    if (slash != std::string::npos) parse_product(s.substr(slash + 1), -1, factors, text);
    if (level == 0) {
        level = 1;
        for (auto [delta, r] : factors) level = std::lcm(level, delta);
    }
    return EtaQuotient(level, std::move(factors));
}

long EtaQuotient::exponent(long delta) const {
    auto it = factors_.find(delta);
    return it == factors_.end() ? 0 : it->second;
}

long EtaQuotient::sum_delta_r() const {
    long s = 0;
    for (auto [delta, r] : factors_) s += delta * r;
    return s;
}

long EtaQuotient::sum_r() const {
    long s = 0;
    for (auto [delta, r] : factors_) s += r;
    return s;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
    std::map<long, long> f = factors_;
    for (auto [delta, r] : other.factors_) f[delta] += r;
    return EtaQuotient(std::lcm(level_, other.level_), std::move(f));
}

EtaQuotient EtaQuotient::pow(long e) const {
    std::map<long, long> f;
    for (auto [delta, r] : factors_) f[delta] = r * e;
    return EtaQuotient(level_, std::move(f));
}

std::string EtaQuotient::to_string() const {
    std::string num, den;
    for (auto [delta, r] : factors_) {
        std::string& dst = r > 0 ? num : den;
        if (!dst.empty()) dst += "*";
        dst += std::to_string(delta);
        if (std::abs(r) != 1 || delta == 1) dst += "^" + std::to_string(std::abs(r));
    }
    std::string out = num.empty() ? "1" : num;
    if (!den.empty()) out += "/" + den;
    return out + " @" + std::to_string(level_);
}

void to_json(nlohmann::json& j, const EtaQuotient& e) {
    nlohmann::json factors = nlohmann::json::array();
    for (auto [delta, r] : e.factors()) factors.push_back({{"delta", delta}, {"exp", r}});
    j = {{"level", e.level()}, {"factors", std::move(factors)}};
}

void from_json(const nlohmann::json& j, EtaQuotient& e) {
    std::map<long, long> f;
    for (const auto& item : j.at("factors")) f[item.at("delta").get<long>()] += item.at("exp").get<long>();
    e = EtaQuotient(j.at("level").get<long>(), std::move(f));
}

QSeries eta_product(const EtaQuotient& e, long truncation) {
    if (truncation <= 0) return QSeries::zero(truncation);
    std::vector<BigInt> x(static_cast<std::size_t>(truncation));
    x[0] = 1;
    for (auto [delta, r] : e.factors()) {
        detail::SparseTerms terms;
        for (long j = 0;; ++j) {
            long g_pos = delta * (j * (3 * j - 1) / 2);
            long g_neg = delta * (j * (3 * j + 1) / 2);
            if (g_pos >= truncation) break;
            long sign = j % 2 == 0 ? 1 : -1;
            terms.emplace_back(static_cast<std::size_t>(g_pos), sign);
            if (j > 0 && g_neg < truncation) terms.emplace_back(static_cast<std::size_t>(g_neg), sign);
        }
        for (long i = 0; i < std::abs(r); ++i) {
            if (r > 0)
                detail::mul_sparse_in_place(x, terms);
            else
                detail::div_sparse_in_place(x, terms);
        }
    }
    return QSeries(0, detail::to_rationals(x, BigInt(1)), truncation);
}

QSeries eta_expand(const EtaQuotient& e, long truncation) {
    long s = e.sum_delta_r();
    if (s % 24 != 0) throw FractionalPrefactor(s);
    long prefactor = s / 24;
    if (truncation <= prefactor) return QSeries::zero(truncation);
    return eta_product(e, truncation - prefactor).shifted(prefactor);
}

namespace {

// Squarefree kernel of prod delta^{r_delta}, as a positive integer.
long squarefree_kernel(const std::map<long, long>& factors) {
    std::map<long, long> prime_exp;
    for (auto [delta, r] : factors) {
        long d = delta;
        for (long p = 2; p * p <= d; ++p)
            while (d % p == 0) {
                prime_exp[p] += r;
                d /= p;
            }
        if (d > 1) prime_exp[d] += r;
    }
    long kernel = 1;
    for (auto [p, e] : prime_exp)
        if (e % 2 != 0) kernel *= p;
    return kernel;
}

} // namespace

ModularityReport ghn_check(const EtaQuotient& e) {
    ModularityReport rep;
    const long n = e.level();
    rep.weight = Rational(e.sum_r(), 2);
    rep.weight.canonicalize();
    long sum_b = 0;
    for (auto [delta, r] : e.factors()) sum_b += (n / delta) * r;
    rep.cond24_a = e.sum_delta_r() % 24 == 0;
    rep.cond24_b = sum_b % 24 == 0;

    rep.is_holomorphic = true;
    rep.is_cusp = true;
    for (long s = 1; s <= n; ++s) {
        if (n % s != 0) continue;
        Rational order = 0;
        for (auto [delta, r] : e.factors()) {
            long g = std::gcd(s, delta);
            order += Rational(g * g * r, std::gcd(s, n / s) * s * delta);
        }
        order *= Rational(n, 24);
        order.canonicalize();
        if (sgn(order) < 0) rep.is_holomorphic = false;
        if (sgn(order) <= 0) rep.is_cusp = false;
        rep.cusp_orders.emplace(s, order);
    }

    if (e.sum_r() % 2 == 0) {
        long k = e.sum_r() / 2;
        long d = (k % 2 == 0 ? 1 : -1) * squarefree_kernel(e.factors());
        long mod4 = ((d % 4) + 4) % 4;
        rep.character_discriminant = mod4 == 1 ? d : 4 * d;
    }
    return rep;
}

void to_json(nlohmann::json& j, const ModularityReport& r) {
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [s, o] : r.cusp_orders) orders[std::to_string(s)] = o.get_str();
    j = {{"weight", r.weight.get_str()},
         {"cond24_a", r.cond24_a},
         {"cond24_b", r.cond24_b},
         {"cusp_orders", std::move(orders)},
         {"is_holomorphic", r.is_holomorphic},
         {"is_cusp", r.is_cusp},
         {"character_discriminant", r.character_discriminant ? nlohmann::json(*r.character_discriminant)
                                                             : nlohmann::json(nullptr)}};
}

namespace quotients {

EtaQuotient f_k(long k) { return EtaQuotient(8, {{2, -4 * k}, {4, 8 * k - 2}, {8, 4}}); }
EtaQuotient big_f() { return EtaQuotient(8, {{2, -4}, {4, 8}}); }
EtaQuotient big_f2() { return EtaQuotient(8, {{4, -4}, {8, 8}}); }
EtaQuotient theta() { return EtaQuotient(4, {{1, -2}, {2, 5}, {4, -2}}); }
EtaQuotient theta2() { return EtaQuotient(8, {{2, -2}, {4, 5}, {8, -2}}); }

} // namespace quotients

} // namespace betaq
