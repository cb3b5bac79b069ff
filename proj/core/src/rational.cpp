#include "planeflow/rational.hpp"

namespace planeflow {

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    mpz_class num, den;
    if (slash == std::string::npos) {
        if (!is_int(text)) return std::nullopt;
        num = mpz_class(text);
        den = 1;
    } else {
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        num = mpz_class(ns);
        den = mpz_class(ds);
        if (den == 0) return std::nullopt;
    }
    Rat value(num, den);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace planeflow
