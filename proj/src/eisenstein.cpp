#include "st34/eisenstein.hpp"

#include <stdexcept>

namespace st34 {

std::string to_string(const QOmega& x)
{
    std::string out = x.re.to_string();
    if (x.w.sign() < 0) {
        out += "-" + (-x.w).to_string();
    } else {
        out += "+" + x.w.to_string();
    }
    return out + "*w";
}

QOmega parse_qomega(std::string_view text)
{
    if (text.size() < 4 || text.substr(text.size() - 2) != "*w") {
        throw std::invalid_argument("expected 'a+b*w', got '" + std::string(text) + "'");
    }
    const auto body = text.substr(0, text.size() - 2);
    // the separator is the last sign that is not the leading sign of a
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            const auto rest = body.substr(i + 1);
            if (rest.empty() || rest[0] == '+' || rest[0] == '-') {
                break;
            }
            const Rational re = Rational::parse(body.substr(0, i));
            const Rational w = Rational::parse(rest);
            return QOmega(re, body[i] == '-' ? -w : w);
        }
    }
    throw std::invalid_argument("expected 'a+b*w', got '" + std::string(text) + "'");
}

}  // namespace st34
