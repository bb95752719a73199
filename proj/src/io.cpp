#include "quaderint/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "quaderint/errors.hpp"

namespace quaderint {

namespace {

// ---------------------------------------------------------------------------
// Cursor: position-tracked scanning with '#' comments as whitespace
// ---------------------------------------------------------------------------

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + msg);
    }

    bool raw_eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get() {
        const char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip() {
        while (!raw_eof()) {
            const char c = peek();
            if (c == '#') {
                while (!raw_eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip();
        return raw_eof();
    }

    void expect(char c, const char* what) {
        skip();
        if (raw_eof() || peek() != c) fail(std::string("expected '") + c + "' " + what);
        get();
    }

    bool try_consume(char c) {
        skip();
        if (raw_eof() || peek() != c) return false;
        get();
        return true;
    }

    bool next_is_letter() {
        skip();
        return !raw_eof() && std::isalpha(static_cast<unsigned char>(peek()));
    }

    std::string word() {
        skip();
        if (raw_eof() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a keyword");
        std::string w;
        while (!raw_eof() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                              peek() == '_' || peek() == '-')) {
            w += get();
        }
        return w;
    }

    void expect_word(const std::string& w, const char* what) {
        skip();
        if (word() != w) fail("expected '" + w + "' " + what);
    }

    std::string digits() {
        skip();
        if (raw_eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::string d;
        while (!raw_eof() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        return d;
    }

    std::size_t natural() {
        const std::string d = digits();
        if (d.size() > 9) fail("number too large");
        return static_cast<std::size_t>(std::stoul(d));
    }

    Rational rational() {
        skip();
        bool neg = false;
        if (!raw_eof() && (peek() == '-' || peek() == '+')) neg = get() == '-';
        const std::string ip = digits();
        Rational r;
        if (!raw_eof() && peek() == '.') {
            get();
            const std::string fp = digits();
            Integer den(1);
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            r = Rational(Integer(ip) * den + Integer(fp), den);
        } else if (!raw_eof() && peek() == '/') {
            get();
            const std::string dp = digits();
            const Integer den(dp);
            if (den == 0) fail("zero denominator");
            r = Rational(Integer(ip), den);
        } else {
            r = Rational(Integer(ip));
        }
        return neg ? Rational(-r) : r;
    }

    double real() {
        skip();
        if (raw_eof()) fail("expected a number");
        std::string tok;
        while (!raw_eof()) {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' || c == ';' ||
                c == ')' || c == '(' || c == ':')
                break;
            tok += get();
        }
        if (tok.empty()) fail("expected a number");
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size()) fail("malformed number '" + tok + "'");
        if (!std::isfinite(v)) fail("number '" + tok + "' is not finite");
        return v;
    }

    StepValue value() {
        skip();
        if (try_consume('(')) {
            Rational re = rational();
            expect(',', "between real and imaginary part");
            Rational im = rational();
            expect(')', "after complex value");
            return {std::move(re), std::move(im)};
        }
        return StepValue(rational());
    }

    // rationals separated by commas, ending before `stop`
    std::vector<Rational> rational_list(char stop) {
        std::vector<Rational> out;
        skip();
        if (!raw_eof() && peek() == stop) return out;
        out.push_back(rational());
        while (try_consume(',')) out.push_back(rational());
        return out;
    }

    Interval interval() {
        skip();
        if (next_is_letter()) {
            if (word() != "empty") fail("expected an interval");
            return Interval::empty();
        }
        if (raw_eof() || (peek() != '[' && peek() != ']')) fail("expected an interval");
        const bool lo_closed = get() == '[';
        Endpoint lo = lower_endpoint(lo_closed);
        expect(',', "between interval endpoints");
        skip();
        Endpoint hi = upper_endpoint();
        return Interval::make(std::move(lo), std::move(hi));
    }

    Endpoint lower_endpoint(bool closed) {
        skip();
        bool neg = false;
        if (!raw_eof() && peek() == '-') {
            neg = true;
            get();
        }
        if (!raw_eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            if (word() != "inf" || !neg) fail("expected a rational or -inf");
            if (closed) fail("unbounded endpoints must be open");
            return Endpoint::neg_inf();
        }
        Rational r = rational_after_sign(neg);
        return Endpoint::finite(std::move(r), closed);
    }

    Endpoint upper_endpoint() {
        skip();
        if (!raw_eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            if (word() != "inf") fail("expected a rational or inf");
            expect('[', "after inf (unbounded endpoints are open)");
            return Endpoint::pos_inf();
        }
        Rational r = rational();
        skip();
        if (raw_eof() || (peek() != ']' && peek() != '[')) fail("expected ']' or '[' after bound");
        const bool closed = get() == ']';
        return Endpoint::finite(std::move(r), closed);
    }

    Rational rational_after_sign(bool neg) {
        const std::string ip = digits();
        Rational r;
        if (!raw_eof() && peek() == '.') {
            get();
            const std::string fp = digits();
            Integer den(1);
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            r = Rational(Integer(ip) * den + Integer(fp), den);
        } else if (!raw_eof() && peek() == '/') {
            get();
            const Integer den{Integer(digits())};
            if (den == 0) fail("zero denominator");
            r = Rational(Integer(ip), den);
        } else {
            r = Rational(Integer(ip));
        }
        return neg ? Rational(-r) : r;
    }

    Quader quader() {
        skip();
        std::vector<Interval> fs;
        if (next_is_letter()) {
            if (word() != "empty") fail("expected a quader");
            if (try_consume('(')) {
                const std::size_t n = natural();
                expect(')', "after dimension");
                return Quader::empty(n);
            }
            fs.push_back(Interval::empty());
        } else {
            fs.push_back(interval());
        }
        while (true) {
            skip();
            if (raw_eof() || peek() != 'x') break;
            get();
            fs.push_back(interval());
        }
        return Quader(std::move(fs));
    }

    // quaders separated by '|'; empties dropped, dimension of the first kept
    std::pair<std::vector<Quader>, std::size_t> quader_union() {
        std::vector<Quader> qs;
        Quader first = quader();
        const std::size_t dim = first.dim();
        if (!first.is_empty()) qs.push_back(std::move(first));
        while (try_consume('|')) {
            Quader q = quader();
            if (!q.is_empty()) qs.push_back(std::move(q));
        }
        return {std::move(qs), dim};
    }

    Parkettable parkettable() {
        auto [qs, dim] = quader_union();
        return Parkettable(dim, std::move(qs));
    }

    std::vector<Rational> point() {
        expect('(', "before point coordinates");
        std::vector<Rational> p = rational_list(')');
        expect(')', "after point coordinates");
        if (p.empty()) fail("a point needs at least one coordinate");
        return p;
    }

    BoxMeasure measure_expr() {
        const std::string kind = word();
        if (kind == "volume") {
            expect('(', "after volume");
            const std::size_t n = natural();
            expect(')', "after dimension");
            return BoxMeasure::volume(n);
        }
        if (kind == "dirac") {
            expect('(', "after dirac");
            std::vector<Rational> p = rational_list(')');
            expect(')', "after dirac point");
            return BoxMeasure::dirac(std::move(p));
        }
        if (kind == "discrete") {
            expect('(', "after discrete");
            std::vector<std::vector<Rational>> points;
            std::vector<Rational> masses;
            while (true) {
                points.push_back(point());
                expect(':', "between point and mass");
                masses.push_back(rational());
                if (!try_consume(',')) break;
            }
            expect(')', "after discrete mass points");
            return BoxMeasure::discrete(std::move(points), std::move(masses));
        }
        if (kind == "stieltjes") {
            expect('(', "after stieltjes");
            expect_word("breaks", "in stieltjes");
            expect(':', "after breaks");
            std::vector<Rational> breaks = rational_list(';');
            expect(';', "after break list");
            expect_word("values", "in stieltjes");
            expect(':', "after values");
            std::vector<Rational> at_breaks = rational_list(';');
            expect(';', "after value list");
            expect_word("pieces", "in stieltjes");
            expect(':', "after pieces");
            std::vector<StieltjesWeight::Piece> pieces;
            while (true) {
                expect('(', "before affine piece");
                Rational a = rational();
                expect(',', "between piece coefficients");
                Rational b = rational();
                expect(')', "after affine piece");
                pieces.push_back({std::move(a), std::move(b)});
                if (!try_consume(',')) break;
            }
            expect(')', "after stieltjes weight");
            return BoxMeasure::stieltjes(
                StieltjesWeight(std::move(breaks), std::move(pieces), std::move(at_breaks)));
        }
        if (kind == "product") {
            expect('(', "after product");
            BoxMeasure left = measure_expr();
            expect(',', "between product factors");
            BoxMeasure right = measure_expr();
            expect(')', "after product factors");
            return BoxMeasure::product(std::move(left), std::move(right));
        }
        fail("unknown measure kind '" + kind + "'");
    }

    std::vector<double> reals(std::size_t count) {
        std::vector<double> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(real());
        return out;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Formatting (format_rational comes from rational.hpp)
// ---------------------------------------------------------------------------

std::string format_value(const StepValue& v) {
    if (v.is_real()) return format_rational(v.re);
    return "(" + format_rational(v.re) + ", " + format_rational(v.im) + ")";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_interval(const Interval& iv) {
    if (iv.is_empty()) return "empty";
    std::string out;
    if (iv.lower().is_finite())
        out += (iv.lower().closed ? "[" : "]") + format_rational(iv.lower().value);
    else
        out += "]-inf";
    out += ", ";
    if (iv.upper().is_finite())
        out += format_rational(iv.upper().value) + (iv.upper().closed ? "]" : "[");
    else
        out += "inf[";
    return out;
}

std::string format_quader(const Quader& q) {
    if (q.is_empty()) return "empty(" + std::to_string(q.dim()) + ")";
    std::string out;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        if (i) out += " x ";
        out += format_interval(q.factor(i));
    }
    return out;
}

std::string format_parkettable(const Parkettable& p) {
    if (p.is_empty()) return "empty(" + std::to_string(p.dim()) + ")";
    std::string out;
    for (std::size_t i = 0; i < p.pieces().size(); ++i) {
        if (i) out += " | ";
        out += format_quader(p.pieces()[i]);
    }
    return out;
}

std::string format_measure(const BoxMeasure& m) {
    switch (m.kind()) {
        case BoxMeasure::Kind::Volume:
            return "volume(" + std::to_string(m.dim()) + ")";
        case BoxMeasure::Kind::Discrete: {
            std::string out = "discrete(";
            for (std::size_t i = 0; i < m.points().size(); ++i) {
                if (i) out += ", ";
                out += "(";
                for (std::size_t j = 0; j < m.points()[i].size(); ++j) {
                    if (j) out += ", ";
                    out += format_rational(m.points()[i][j]);
                }
                out += "): " + format_rational(m.masses()[i]);
            }
            return out + ")";
        }
        case BoxMeasure::Kind::Stieltjes: {
            const StieltjesWeight& w = m.weight();
            std::string out = "stieltjes(breaks:";
            for (std::size_t i = 0; i < w.breaks().size(); ++i)
                out += (i ? ", " : " ") + format_rational(w.breaks()[i]);
            out += "; values:";
            for (std::size_t i = 0; i < w.at_breaks().size(); ++i)
                out += (i ? ", " : " ") + format_rational(w.at_breaks()[i]);
            out += "; pieces:";
            for (std::size_t i = 0; i < w.pieces().size(); ++i)
                out += (i ? ", (" : " (") + format_rational(w.pieces()[i].a) + ", " +
                       format_rational(w.pieces()[i].b) + ")";
            return out + ")";
        }
        case BoxMeasure::Kind::Product:
            return "product(" + format_measure(m.left()) + ", " + format_measure(m.right()) + ")";
    }
    throw ContractError("unknown measure kind");
}

// ---------------------------------------------------------------------------
// Whole-text scalar/geometry parsers
// ---------------------------------------------------------------------------

namespace {

template <typename F>
auto parse_whole(const std::string& text, F f) {
    Cursor c(text);
    auto out = f(c);
    if (!c.at_end()) c.fail("unexpected trailing input");
    return out;
}

}  // namespace

StepValue parse_value(const std::string& text) {
    return parse_whole(text, [](Cursor& c) { return c.value(); });
}

Interval parse_interval(const std::string& text) {
    return parse_whole(text, [](Cursor& c) { return c.interval(); });
}

Quader parse_quader(const std::string& text) {
    return parse_whole(text, [](Cursor& c) { return c.quader(); });
}

Parkettable parse_parkettable(const std::string& text) {
    return parse_whole(text, [](Cursor& c) { return c.parkettable(); });
}

BoxMeasure parse_measure(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("measure", "at the start of a measure document");
        return c.measure_expr();
    });
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

StepFunction parse_stepfn(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("stepfn", "at the start of a step-function document");
        c.expect_word("ambient", "before the ambient quader");
        Quader ambient = c.quader();
        std::vector<StepFunction::Term> terms;
        while (!c.at_end()) {
            c.expect_word("term", "to introduce another term");
            StepValue v = c.value();
            c.expect_word("on", "between value and quader");
            Quader q = c.quader();
            terms.emplace_back(std::move(q), std::move(v));
        }
        return StepFunction(std::move(ambient), std::move(terms));
    });
}

OracleDoc parse_oracle(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("oracle", "at the start of an oracle document");
        OracleDoc doc;
        doc.kind = c.word();
        if (doc.kind == "poly") {
            c.expect('(', "after poly");
            std::vector<Rational> coeffs = c.rational_list(')');
            c.expect(')', "after coefficients");
            doc.oracle = oracle_poly(std::move(coeffs));
        } else if (doc.kind == "polyprod") {
            c.expect('(', "after polyprod");
            std::vector<std::vector<Rational>> axes;
            while (true) {
                c.expect('(', "before axis coefficients");
                axes.push_back(c.rational_list(')'));
                c.expect(')', "after axis coefficients");
                if (!c.try_consume(',')) break;
            }
            c.expect(')', "after polyprod axes");
            doc.oracle = oracle_poly_product(std::move(axes));
        } else if (doc.kind == "indicator") {
            c.expect('(', "after indicator");
            Quader q = c.quader();
            c.expect(')', "after indicator quader");
            doc.oracle = oracle_indicator(std::move(q));
        } else {
            c.fail("unknown oracle kind '" + doc.kind + "'");
        }
        if (!c.at_end()) {
            c.expect_word("domain", "after the oracle expression");
            doc.domain = c.quader();
        }
        return doc;
    });
}

std::vector<IPElement> parse_elements(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("elements", "at the start of an elements document");
        std::vector<IPElement> out;
        while (!c.at_end()) {
            const std::string kind = c.word();
            if (kind == "vec") {
                c.expect('(', "after vec");
                std::vector<StepValue> entries;
                entries.push_back(c.value());
                while (c.try_consume(',')) entries.push_back(c.value());
                c.expect(')', "after vec entries");
                out.push_back(IPElement::vec(std::move(entries)));
            } else if (kind == "poly") {
                c.expect('(', "after poly");
                Interval iv = c.interval();
                if (iv.is_empty() || !iv.lower().is_finite() || !iv.upper().is_finite() ||
                    !iv.lower().closed || !iv.upper().closed)
                    c.fail("poly elements need a closed bounded interval");
                c.expect(';', "between interval and coefficients");
                std::vector<Rational> coeffs = c.rational_list(')');
                c.expect(')', "after coefficients");
                out.push_back(
                    IPElement::poly(std::move(coeffs), iv.lower().value, iv.upper().value));
            } else {
                c.fail("elements must be vec(...) or poly(...)");
            }
        }
        if (out.empty()) throw ParseError("line 1, column 1: elements document is empty");
        return out;
    });
}

ContractionSpec parse_contraction(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("contraction", "at the start of a contraction document");
        const std::string kind = c.word();
        if (kind == "cos") {
            c.expect_word("start", "for the cos contraction");
            return make_cos_contraction(c.real());
        }
        if (kind == "affine") {
            c.expect_word("matrix", "for the affine contraction");
            const std::size_t n = c.natural();
            std::vector<double> entries = c.reals(n * n);
            Matrix a(n, std::move(entries));
            c.expect_word("offset", "after the matrix");
            std::vector<double> offset = c.reals(n);
            c.expect_word("start", "after the offset");
            std::vector<double> start = c.reals(n);
            return make_affine_contraction(a, std::move(offset), std::move(start));
        }
        c.fail("unknown contraction kind '" + kind + "'");
    });
}

Matrix parse_matrix(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("matrix", "at the start of a matrix document");
        const std::size_t n = c.natural();
        if (n == 0 || n > 1024) c.fail("matrix dimension out of range");
        return Matrix(n, c.reals(n * n));
    });
}

Halfspaces parse_halfspaces(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("halfspaces", "at the start of a halfspaces document");
        const std::size_t dim = c.natural();
        if (dim == 0 || dim > 1024) c.fail("halfspace dimension out of range");
        std::vector<std::vector<double>> rows;
        std::vector<double> bounds;
        while (!c.at_end()) {
            c.expect_word("row", "to introduce another halfspace");
            rows.push_back(c.reals(dim));
            c.expect_word("bound", "after the row normal");
            bounds.push_back(c.real());
        }
        return Halfspaces(dim, std::move(rows), std::move(bounds));
    });
}

std::vector<std::vector<double>> parse_points(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("points", "at the start of a points document");
        const std::size_t dim = c.natural();
        if (dim == 0 || dim > 1024) c.fail("point dimension out of range");
        std::vector<std::vector<double>> out;
        while (!c.at_end()) out.push_back(c.reals(dim));
        return out;
    });
}

RegionDoc parse_region(const std::string& text) {
    return parse_whole(text, [](Cursor& c) {
        c.expect_word("region", "at the start of a region document");
        RegionDoc doc;
        while (!c.at_end()) {
            const std::string kind = c.word();
            if (kind == "open") {
                doc.open = c.quader_union().first;
            } else if (kind == "closed") {
                doc.closed = c.parkettable();
            } else if (kind == "svc") {
                const std::size_t stage = c.natural();
                Parkettable p = svc_stage(static_cast<int>(stage));
                doc.open.clear();
                for (const Quader& piece : p.pieces()) {
                    const Interval& iv = piece.factor(0);
                    doc.open.push_back(
                        Quader({Interval::open(iv.lower().value, iv.upper().value)}));
                }
                doc.closed = std::move(p);
            } else {
                c.fail("region entries are open, closed, or svc");
            }
        }
        return doc;
    });
}

}  // namespace quaderint
