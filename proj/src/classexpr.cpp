#include <gwdp/classexpr.hpp>

#include <cctype>
#include <vector>

namespace gwdp {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skipSpace() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skipSpace();
        return pos >= text.size();
    }
    char peek() {
        skipSpace();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skipSpace();
        return text[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    std::int64_t integer() {
        skipSpace();
        const std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos = start;
            fail("malformed integer");
        }
        std::int64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000'000) fail("integer out of range");
            ++pos;
        }
        return negative ? -value : value;
    }

    // [int] before a letter; 1 when absent.
    std::int64_t optionalCoefficient() {
        skipSpace();
        if (pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' || text[pos] == '+'))
            return integer();
        return 1;
    }
};

}  // namespace

ClassVec parseClass(std::string_view text, const Surface& surface) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty class expression", 0);

    if (surface.kind() == SurfaceKind::Quadric) {
        if (cur.peek() != '(') cur.fail("expected pair syntax (a,b) on " + surface.name());
        cur.take();
        const std::int64_t a = cur.integer();
        if (cur.peek() != ',') cur.fail("expected ','");
        cur.take();
        const std::int64_t b = cur.integer();
        if (cur.peek() != ')') cur.fail("expected ')'");
        cur.take();
        if (!cur.done()) cur.fail("trailing input after pair");
        return {a, b};
    }

    if (cur.peek() == '(') cur.fail("pair syntax is only valid on P1xP1");
    const int k = surface.blowupCount();
    ClassVec v(static_cast<std::size_t>(k) + 1, 0);

    const std::int64_t d = cur.optionalCoefficient();
    if (cur.peek() != 'L') cur.fail("expected 'L'");
    cur.take();
    v[0] = d;

    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    while (!cur.done()) {
        const char sign = cur.peek();
        if (sign != '+' && sign != '-') cur.fail("expected '+' or '-'");
        cur.take();
        const std::int64_t c = cur.optionalCoefficient();
        if (cur.peek() != 'E') cur.fail("expected 'E'");
        cur.take();
        const std::int64_t idx = cur.integer();
        if (idx < 1 || idx > k)
            cur.fail("E" + std::to_string(idx) + " out of range on " + surface.name());
        if (seen[static_cast<std::size_t>(idx)]) cur.fail("duplicate index E" + std::to_string(idx));
        seen[static_cast<std::size_t>(idx)] = true;
        // the text term (sign c)Ei contributes -(sign c) to the stored a_i
        v[static_cast<std::size_t>(idx)] = sign == '-' ? c : -c;
    }
    return v;
}

std::string formatClass(const Surface& surface, const ClassVec& beta) {
    surface.requireClass(beta);
    if (surface.kind() == SurfaceKind::Quadric)
        return "(" + std::to_string(beta[0]) + "," + std::to_string(beta[1]) + ")";
    std::string out;
    if (beta[0] == 1)
        out = "L";
    else if (beta[0] == -1)
        out = "-L";
    else
        out = std::to_string(beta[0]) + "L";
    for (std::size_t i = 1; i < beta.size(); ++i) {
        const std::int64_t a = beta[i];
        if (a == 0) continue;
        out += a > 0 ? '-' : '+';
        const std::int64_t c = a > 0 ? a : -a;
        if (c != 1) out += std::to_string(c);
        out += "E" + std::to_string(i);
    }
    return out;
}

}  // namespace gwdp
