#include "cremona/rational.hpp"

namespace cremona {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational_from_string: empty input");
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            throw std::invalid_argument("rational_from_string: malformed fraction '" + text + "'");
    }
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        std::size_t i = 0;
        if (sign_ok && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("rational_from_string: malformed number '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw std::domain_error("rational_from_string: zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_fraction(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_to_fraction(q);
}

Rational random_rational(std::mt19937_64& rng, long bound, long den_bound) {
    std::uniform_int_distribution<long> num_dist(-bound, bound);
    std::uniform_int_distribution<long> den_dist(1, den_bound);
    long n = 0;
    while (n == 0) n = num_dist(rng);
    return rational(n, den_dist(rng));
}

} // namespace cremona
