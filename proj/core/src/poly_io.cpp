#include "cremona/poly_io.hpp"

#include <fstream>
#include <sstream>

namespace cremona {

void print_polynomial(std::ostream& os, const Polynomial& p) {
    if (!p.ring()) throw std::invalid_argument("print_polynomial: missing ring");
    os << "vars:";
    for (const auto& n : p.ring()->names()) os << " " << n;
    os << "\n";
    for (const auto& t : p.terms()) {
        os << rational_to_fraction(t.coeff);
        for (std::size_t v = 0; v < p.ring()->size(); ++v) os << " " << t.mono.degree_in(v);
        os << "\n";
    }
}

std::string polynomial_to_text(const Polynomial& p) {
    std::ostringstream os;
    print_polynomial(os, p);
    return os.str();
}

Polynomial parse_polynomial(std::istream& is) {
    std::string line;
    RingPtr ring;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "vars:") throw parse_error("parse_polynomial: expected 'vars:' header");
        std::vector<std::string> names;
        std::string n;
        while (ls >> n) names.push_back(n);
        try {
            ring = Ring::create(std::move(names));
        } catch (const std::exception& e) {
            throw parse_error(std::string("parse_polynomial: bad variable list: ") + e.what());
        }
        break;
    }
    if (!ring) throw parse_error("parse_polynomial: missing header");

    std::vector<Term> terms;
    while (std::getline(is, line)) {
        if (line.empty()) break;
        if (line[0] == '#') continue;
        std::istringstream ls(line);
        std::string coeff_text;
        if (!(ls >> coeff_text)) throw parse_error("parse_polynomial: empty term line");
        Term t;
        try {
            t.coeff = rational_from_string(coeff_text);
        } catch (const std::exception& e) {
            throw parse_error(std::string("parse_polynomial: bad coefficient: ") + e.what());
        }
        for (std::size_t v = 0; v < ring->size(); ++v) {
            long e = -1;
            if (!(ls >> e) || e < 0 || e > 0xFFFF)
                throw parse_error("parse_polynomial: bad exponent list");
            t.mono.e[v] = std::uint16_t(e);
        }
        long extra;
        if (ls >> extra) throw parse_error("parse_polynomial: too many exponents");
        terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial polynomial_from_text(const std::string& text) {
    std::istringstream is(text);
    return parse_polynomial(is);
}

void save_polynomial(const std::string& path, const Polynomial& p) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_polynomial: cannot open " + path);
    print_polynomial(f, p);
}

Polynomial load_polynomial(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_polynomial: cannot open " + path);
    return parse_polynomial(f);
}

} // namespace cremona
