#include "tropic/rational.hpp"

namespace tropic {

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s, bool normalize) {
    if (s.empty()) throw validation_error("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw validation_error("malformed rational '" + s + "'");
    }
    auto digits = [](const std::string& t) {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!digits(num) || !digits(den)) throw validation_error("malformed rational '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw validation_error("zero denominator in '" + s + "'");
    Rat r(n, d);
    Rat canon = r;
    canon.canonicalize();
    if (!normalize && (canon.get_num() != n || canon.get_den() != d))
        throw validation_error("rational '" + s + "' is not in reduced form");
    return canon;
}

Int isqrt(const Int& n) {
    if (n < 0) throw validation_error("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace tropic
