#include "cremona/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace cremona {

namespace {

void require_ring(const RingPtr& r, const char* what) {
    if (!r) throw std::invalid_argument(std::string(what) + ": polynomial without a ring");
}

bool all_integer(const std::vector<Term>& terms) {
    for (const auto& t : terms)
        if (mpz_cmp_ui(mpq_denref(t.coeff.get_mpq_t()), 1) != 0) return false;
    return true;
}

// Open-addressing accumulator keyed by packed exponent vectors. The hot
// loop of every large product lands here: one hash probe plus one
// mpz_addmul per term pair.
struct FlatAcc {
    static constexpr std::uint64_t EMPTY = ~std::uint64_t(0);
    std::vector<std::uint64_t> keys;
    std::vector<Integer> vals;
    std::size_t mask = 0;
    std::size_t count = 0;

    explicit FlatAcc(std::size_t expect) {
        std::size_t cap = 1024;
        while (cap * 3 < expect * 5) cap <<= 1;
        keys.assign(cap, EMPTY);
        vals.resize(cap);
        mask = cap - 1;
    }

    static std::uint64_t hash(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ull;
        x ^= x >> 33;
        return x;
    }

    void grow() {
        std::vector<std::uint64_t> old_keys = std::move(keys);
        std::vector<Integer> old_vals = std::move(vals);
        std::size_t cap = (mask + 1) << 2;
        keys.assign(cap, EMPTY);
        vals.clear();
        vals.resize(cap);
        mask = cap - 1;
        for (std::size_t idx = 0; idx < old_keys.size(); ++idx) {
            if (old_keys[idx] == EMPTY) continue;
            std::size_t i = hash(old_keys[idx]) & mask;
            while (keys[i] != EMPTY) i = (i + 1) & mask;
            keys[i] = old_keys[idx];
            vals[i] = std::move(old_vals[idx]);
        }
    }

    Integer& slot(std::uint64_t key) {
        if ((count + 1) * 5 > (mask + 1) * 3) grow();
        std::size_t i = hash(key) & mask;
        while (keys[i] != EMPTY && keys[i] != key) i = (i + 1) & mask;
        if (keys[i] == EMPTY) {
            keys[i] = key;
            ++count;
        }
        return vals[i];
    }
};

// Nine bits per variable, seven variables max: additive on exponent
// vectors as long as every per-variable exponent sum stays below 512,
// which the caller checks before choosing this path.
std::uint64_t pack_monomial(const Monomial& m, std::size_t nvars) {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < nvars; ++v) k = (k << 9) | m.e[v];
    return k;
}

Monomial unpack_monomial(std::uint64_t k, std::size_t nvars) {
    Monomial m;
    for (std::size_t v = nvars; v-- > 0;) {
        m.e[v] = std::uint16_t(k & 0x1FFu);
        k >>= 9;
    }
    return m;
}

bool packable_product(const std::vector<Term>& a, const std::vector<Term>& b, std::size_t nvars) {
    if (nvars > 7) return false;
    std::array<unsigned, 7> maxa{}, maxb{};
    for (const auto& t : a)
        for (std::size_t v = 0; v < nvars; ++v) maxa[v] = std::max(maxa[v], unsigned(t.mono.e[v]));
    for (const auto& t : b)
        for (std::size_t v = 0; v < nvars; ++v) maxb[v] = std::max(maxb[v], unsigned(t.mono.e[v]));
    for (std::size_t v = 0; v < nvars; ++v)
        if (maxa[v] + maxb[v] > 511) return false;
    return true;
}

} // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, unsigned exp) {
    require_ring(ring, "variable");
    if (index >= ring->size()) throw std::invalid_argument("variable: index out of range");
    Polynomial p(ring);
    if (exp > 0xFFFFu) throw std::overflow_error("variable: exponent too large");
    p.terms_.push_back({Monomial::variable(index, std::uint16_t(exp)), Rational(1)});
    if (exp == 0) p.terms_[0].mono = Monomial::one();
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name, unsigned exp) {
    require_ring(ring, "variable");
    return variable(ring, ring->require_index(name), exp);
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
    throw std::domain_error("constant_value: polynomial is not constant");
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.total_degree();
}

std::optional<unsigned> Polynomial::degree_in(const std::vector<std::size_t>& vars) const {
    if (terms_.empty()) return std::nullopt;
    unsigned best = 0;
    for (const auto& t : terms_) {
        unsigned d = 0;
        for (auto v : vars) d += t.mono.degree_in(v);
        best = std::max(best, d);
    }
    return best;
}

std::optional<unsigned> Polynomial::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned best = terms_.front().mono.total_degree();
    for (const auto& t : terms_) best = std::min(best, t.mono.total_degree());
    return best;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

bool Polynomial::is_homogeneous_in(const std::vector<std::size_t>& vars) const {
    if (terms_.empty()) return true;
    auto part = [&](const Monomial& m) {
        unsigned d = 0;
        for (auto v : vars) d += m.degree_in(v);
        return d;
    };
    unsigned d = part(terms_.front().mono);
    for (const auto& t : terms_)
        if (part(t.mono) != d) return false;
    return true;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    return terms_.front();
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial::one();
    Monomial g = terms_.front().mono;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < g.e.size(); ++i)
            g.e[i] = std::min(g.e[i], t.mono.e[i]);
    return g;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "add");
    Polynomial r(ring_ ? ring_ : o.ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i; ++j;
        } else if (grlex_greater(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "mul");
    RingPtr ring = ring_ ? ring_ : o.ring_;
    if (terms_.empty() || o.terms_.empty()) return Polynomial(ring);
    if (terms_.size() == 1)
        return o.mul_monomial(terms_[0].mono, terms_[0].coeff);
    if (o.terms_.size() == 1)
        return mul_monomial(o.terms_[0].mono, o.terms_[0].coeff);

    const auto& a = terms_.size() >= o.terms_.size() ? terms_ : o.terms_;
    const auto& b = terms_.size() >= o.terms_.size() ? o.terms_ : terms_;
    std::size_t reserve = std::min<std::size_t>(a.size() * b.size(), std::size_t(1) << 20);

    Polynomial r(ring);
    const std::size_t nvars = ring->size();
    if (all_integer(a) && all_integer(b) && packable_product(a, b, nvars)) {
        // Integer fast path: packed 64-bit exponent keys, open addressing,
        // one mpz_addmul per pair. This is where the heavy identity
        // expansions spend their time.
        FlatAcc acc(std::min<std::size_t>(reserve, 4 * (a.size() + b.size()) + 1024));
        std::vector<std::uint64_t> bk(b.size());
        std::vector<mpz_srcptr> bc(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) {
            bk[j] = pack_monomial(b[j].mono, nvars);
            bc[j] = mpq_numref(b[j].coeff.get_mpq_t());
        }
        for (const auto& ta : a) {
            std::uint64_t ka = pack_monomial(ta.mono, nvars);
            mpz_srcptr ca = mpq_numref(ta.coeff.get_mpq_t());
            for (std::size_t j = 0; j < b.size(); ++j) {
                Integer& slot = acc.slot(ka + bk[j]);
                mpz_addmul(slot.get_mpz_t(), ca, bc[j]);
            }
        }
        r.terms_.reserve(acc.count);
        for (std::size_t i = 0; i < acc.keys.size(); ++i) {
            if (acc.keys[i] == FlatAcc::EMPTY || acc.vals[i] == 0) continue;
            Term term{unpack_monomial(acc.keys[i], nvars), Rational()};
            mpz_swap(mpq_numref(term.coeff.get_mpq_t()), acc.vals[i].get_mpz_t());
            r.terms_.push_back(std::move(term));
        }
    } else if (all_integer(a) && all_integer(b)) {
        std::unordered_map<Monomial, Integer, MonomialHash> acc;
        acc.reserve(reserve);
        for (const auto& ta : a) {
            mpz_srcptr ca = mpq_numref(ta.coeff.get_mpq_t());
            for (const auto& tb : b) {
                Integer& slot = acc[ta.mono * tb.mono];
                mpz_addmul(slot.get_mpz_t(), ca, mpq_numref(tb.coeff.get_mpq_t()));
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c == 0) continue;
            Term term{m, Rational()};
            mpz_swap(mpq_numref(term.coeff.get_mpq_t()), c.get_mpz_t());
            r.terms_.push_back(std::move(term));
        }
    } else {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(reserve);
        for (const auto& ta : a)
            for (const auto& tb : b)
                acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c == 0) continue;
            r.terms_.push_back({m, std::move(c)});
        }
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    require_ring(ring_, "pow");
    if (n == 0) return constant(ring_, Rational(1));
    Polynomial base = *this;
    Polynomial result;
    bool have = false;
    while (n > 0) {
        if (n & 1u) {
            result = have ? result * base : base;
            have = true;
        }
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    require_ring(ring_, "substitute");
    require_ring(target, "substitute");
    if (images.size() != ring_->size())
        throw std::invalid_argument("substitute: need one image per variable");
    for (const auto& img : images) check_same_ring(img.ring(), target, "substitute");

    // Cached powers per variable, computed by binary powering on demand.
    std::vector<std::map<unsigned, Polynomial>> cache(images.size());
    std::function<const Polynomial&(std::size_t, unsigned)> power =
        [&](std::size_t var, unsigned e) -> const Polynomial& {
        auto it = cache[var].find(e);
        if (it != cache[var].end()) return it->second;
        Polynomial value;
        if (e == 0)
            value = Polynomial::constant(target, Rational(1));
        else if (e == 1)
            value = images[var];
        else if (e % 2 == 0) {
            const Polynomial& h = power(var, e / 2);
            value = h * h;
        } else {
            value = power(var, e - 1) * images[var];
        }
        return cache[var].emplace(e, std::move(value)).first->second;
    };

    PolyBuilder out(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < images.size(); ++v) {
            unsigned e = t.mono.degree_in(v);
            if (e == 0) continue;
            prod = prod * power(v, e);
        }
        out.add_scaled(prod, Rational(1));
    }
    return out.take();
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::map<std::string, Polynomial>& images) const {
    require_ring(ring_, "substitute");
    std::vector<Polynomial> full;
    full.reserve(ring_->size());
    for (std::size_t v = 0; v < ring_->size(); ++v) {
        auto it = images.find(ring_->name(v));
        if (it != images.end())
            full.push_back(it->second);
        else
            full.push_back(Polynomial::variable(target, ring_->name(v)));
    }
    return substitute(target, full);
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    require_ring(ring_, "evaluate");
    if (values.size() != ring_->size())
        throw std::invalid_argument("evaluate: need one value per variable");
    std::vector<std::map<unsigned, Rational>> cache(values.size());
    std::function<const Rational&(std::size_t, unsigned)> power =
        [&](std::size_t var, unsigned e) -> const Rational& {
        auto it = cache[var].find(e);
        if (it != cache[var].end()) return it->second;
        Rational value;
        if (e == 0)
            value = 1;
        else if (e == 1)
            value = values[var];
        else if (e % 2 == 0) {
            const Rational& h = power(var, e / 2);
            value = h * h;
        } else {
            value = power(var, e - 1) * values[var];
        }
        return cache[var].emplace(e, std::move(value)).first->second;
    };
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (std::size_t v = 0; v < values.size(); ++v) {
            unsigned e = t.mono.degree_in(v);
            if (e) prod *= power(v, e);
        }
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    require_ring(ring_, "derivative");
    if (var >= ring_->size()) throw std::invalid_argument("derivative: index out of range");
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.mono.degree_in(var);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.e[var] = std::uint16_t(e - 1);
        r.terms_.push_back({m, t.coeff * Rational(long(e))});
    }
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    require_ring(ring_, "derivative");
    return derivative(ring_->require_index(var));
}

std::pair<Polynomial, Polynomial> Polynomial::div_rem(const Polynomial& d) const {
    check_same_ring(ring_, d.ring(), "div_rem");
    if (d.is_zero()) throw std::domain_error("div_rem: division by zero polynomial");
    RingPtr ring = ring_ ? ring_ : d.ring();

    const Monomial& lm = d.leading_term().mono;
    const Rational& lc = d.leading_term().coeff;

    std::unordered_map<Monomial, Rational, MonomialHash> cur;
    cur.reserve(terms_.size() * 2 + 16);
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(&grlex_less)> heap(&grlex_less);
    for (const auto& t : terms_) {
        cur.emplace(t.mono, t.coeff);
        heap.push(t.mono);
    }

    Polynomial q(ring), r(ring);
    while (!heap.empty()) {
        Monomial m = heap.top();
        heap.pop();
        auto it = cur.find(m);
        if (it == cur.end()) continue;
        Rational c = std::move(it->second);
        cur.erase(it);
        if (c == 0) continue;
        if (lm.divides(m)) {
            Monomial qm = m / lm;
            Rational qc = c / lc;
            for (std::size_t k = 1; k < d.terms().size(); ++k) {
                Monomial key = qm * d.terms()[k].mono;
                auto [slot, fresh] = cur.try_emplace(key, Rational(0));
                slot->second -= qc * d.terms()[k].coeff;
                if (fresh) heap.push(key);
            }
            q.terms_.push_back({qm, std::move(qc)});
        } else {
            r.terms_.push_back({m, std::move(c)});
        }
    }
    return {std::move(q), std::move(r)};
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& d) const {
    auto [q, r] = div_rem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::map<unsigned, Polynomial> Polynomial::homogeneous_components(
    const std::vector<std::size_t>& vars) const {
    require_ring(ring_, "homogeneous_components");
    auto part = [&](const Monomial& m) {
        if (vars.empty()) return m.total_degree();
        unsigned d = 0;
        for (auto v : vars) d += m.degree_in(v);
        return d;
    };
    std::map<unsigned, Polynomial> out;
    for (const auto& t : terms_) {
        auto [it, fresh] = out.try_emplace(part(t.mono), Polynomial(ring_));
        (void)fresh;
        it->second.terms_.push_back(t);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t.mono.is_one()) {
            os << rational_to_string(c);
            printed_coeff = true;
        }
        if (!t.mono.is_one()) {
            bool first_factor = !printed_coeff;
            for (std::size_t v = 0; ring_ && v < ring_->size(); ++v) {
                unsigned e = t.mono.degree_in(v);
                if (!e) continue;
                if (!first_factor) os << "*";
                first_factor = false;
                os << ring_->name(v);
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    acc_[m] += c;
}

void PolyBuilder::add_product(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring(), ring_, "PolyBuilder");
    check_same_ring(b.ring(), ring_, "PolyBuilder");
    const auto& big = a.terms().size() >= b.terms().size() ? a.terms() : b.terms();
    const auto& small = a.terms().size() >= b.terms().size() ? b.terms() : a.terms();
    for (const auto& ta : big)
        for (const auto& tb : small)
            acc_[ta.mono * tb.mono] += ta.coeff * tb.coeff;
}

void PolyBuilder::add_scaled(const Polynomial& p, const Rational& c) {
    check_same_ring(p.ring(), ring_, "PolyBuilder");
    if (c == 0) return;
    if (c == 1) {
        for (const auto& t : p.terms()) acc_[t.mono] += t.coeff;
        return;
    }
    for (const auto& t : p.terms()) acc_[t.mono] += t.coeff * c;
}

Polynomial PolyBuilder::take() {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
        if (c == 0) continue;
        terms.push_back({m, std::move(c)});
    }
    acc_.clear();
    Polynomial p = Polynomial::from_terms(ring_, std::move(terms));
    return p;
}

} // namespace cremona
