#pragma once

#include "toruslift/toruslift.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace toruslift {

struct SessionError : Error {
    SessionError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    std::size_t line;
};

namespace session_detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    // split on spaces, but never inside brackets
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : line) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ' ' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline Rat parse_rat(const std::string& s, std::size_t line) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw SessionError(line, "zero denominator");
        return Rat(num, den);
    } catch (const SessionError&) {
        throw;
    } catch (...) {
        throw SessionError(line, "bad rational '" + s + "'");
    }
}

inline Int parse_int(const std::string& s, std::size_t line) {
    Rat r = parse_rat(s, line);
    if (denominator(r) != 1) throw SessionError(line, "expected an integer, got '" + s + "'");
    return numerator(r);
}

/// Split "a,b,c" at top level (commas inside brackets are kept).
inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string strip_brackets(const std::string& s, std::size_t line) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw SessionError(line, "expected a bracketed list, got '" + s + "'");
    return s.substr(1, s.size() - 2);
}

inline std::vector<Rat> parse_vector(const std::string& s, std::size_t line) {
    std::vector<Rat> out;
    for (const auto& part : split_commas(strip_brackets(s, line)))
        out.push_back(parse_rat(part, line));
    return out;
}

template <typename T, typename ParseEntry>
Mat<T> parse_matrix_with(const std::string& s, std::size_t line, ParseEntry parse_entry) {
    std::vector<std::vector<T>> rows;
    for (const auto& row_text : split_commas(strip_brackets(s, line))) {
        std::vector<T> row;
        for (const auto& entry : split_commas(strip_brackets(row_text, line)))
            row.push_back(parse_entry(entry));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw SessionError(line, "empty matrix");
    Mat<T> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw SessionError(line, "ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline RatMat parse_rat_matrix(const std::string& s, std::size_t line) {
    return parse_matrix_with<Rat>(s, line, [&](const std::string& e) { return parse_rat(e, line); });
}

inline IntMat parse_int_matrix(const std::string& s, std::size_t line) {
    return parse_matrix_with<Int>(s, line, [&](const std::string& e) { return parse_int(e, line); });
}

/// Polynomial expressions over x: sums of terms, terms are products of
/// rational literals and powers of x (e.g. "1+x^2", "-3/2*x").
class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t line) : text_(text), line_(line) {}

    Poly parse() {
        Poly p = parse_expr();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    Poly parse_expr() {
        bool negate = consume('-');
        if (!negate) consume('+');
        Poly p = parse_term();
        if (negate) p = -p;
        while (pos_ < text_.size() && (peek() == '+' || peek() == '-')) {
            bool minus = (text_[pos_] == '-');
            ++pos_;
            Poly t = parse_term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (consume('*')) p = p * parse_factor();
        return p;
    }

    Poly parse_factor() {
        if (consume('x')) {
            long k = 1;
            if (consume('^')) k = parse_exponent();
            Poly p(1);
            for (long i = 0; i < k; ++i) p = p * Poly::x();
            return p;
        }
        return Poly(parse_number());
    }

    long parse_exponent() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        return std::stol(text_.substr(start, pos_ - start));
    }

    Rat parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (start == pos_) fail("expected a number or 'x'");
        return parse_rat(text_.substr(start, pos_ - start), line_);
    }

    char peek() const { return text_[pos_]; }
    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SessionError(line_, what + " in polynomial '" + text_ + "'");
    }

    std::string text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline PolyMat parse_poly_matrix(const std::string& s, std::size_t line) {
    return parse_matrix_with<Poly>(
        s, line, [&](const std::string& e) { return PolyParser(e, line).parse(); });
}

inline std::string fmt_rat_vector(const std::vector<Rat>& v, bool records) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? (records ? "," : ", ") : "") << v[i];
    os << "]";
    return os.str();
}

template <typename T>
std::string fmt_int_vector(const std::vector<T>& v, bool records) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? (records ? "," : ", ") : "") << v[i];
    os << "]";
    return os.str();
}

} // namespace session_detail

struct Statement {
    std::size_t line;
    std::vector<std::string> fields;
};

struct Session {
    std::optional<ComplexTorus> torus;
    std::vector<std::string> bundle_names; // declaration order
    std::map<std::string, LineBundle> bundles;
    std::vector<Statement> commands;
};

/// Parse a line-oriented session file. Declarations ("torus", "bundle") are
/// resolved eagerly; commands are validated for name resolution and kept
/// for run().
inline Session parse_session(const std::string& text) {
    using namespace session_detail;
    Session s;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    auto field_value = [](const std::string& f, const std::string& key) -> std::optional<std::string> {
        if (f.size() > key.size() + 1 && f.compare(0, key.size(), key) == 0 && f[key.size()] == '=')
            return f.substr(key.size() + 1);
        return std::nullopt;
    };
    auto require_value = [&](const std::vector<std::string>& fields, std::size_t idx,
                             const std::string& key, std::size_t line) {
        if (idx >= fields.size())
            throw SessionError(line, "missing " + key + "=...");
        auto v = field_value(fields[idx], key);
        if (!v) throw SessionError(line, "expected " + key + "=..., got '" + fields[idx] + "'");
        return *v;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        auto fields = split_fields(raw);
        if (fields.empty()) continue;
        const std::string& kw = fields[0];

        if (kw == "torus") {
            if (s.torus) throw SessionError(lineno, "torus already declared");
            Int g = parse_int(require_value(fields, 1, "g", lineno), lineno);
            RatMat j = parse_rat_matrix(require_value(fields, 2, "J", lineno), lineno);
            if (g <= 0) throw SessionError(lineno, "g must be positive");
            try {
                s.torus = make_torus(static_cast<std::size_t>(g), j);
            } catch (const Error& e) {
                throw SessionError(lineno, e.what());
            }
        } else if (kw == "bundle") {
            if (fields.size() < 2) throw SessionError(lineno, "bundle needs a name");
            const std::string& name = fields[1];
            if (!s.torus) throw SessionError(lineno, "no torus declared");
            if (s.bundles.count(name)) throw SessionError(lineno, "duplicate bundle '" + name + "'");
            IntMat e = parse_int_matrix(require_value(fields, 2, "E", lineno), lineno);
            std::vector<Rat> chi = parse_vector(require_value(fields, 3, "chi", lineno), lineno);
            if (!e.is_alternating()) throw SessionError(lineno, "E not alternating");
            try {
                s.bundles.emplace(name, make_bundle(*s.torus, e, chi));
                s.bundle_names.push_back(name);
            } catch (const Error& err) {
                throw SessionError(lineno, err.what());
            }
        } else if (kw == "cohomology" || kw == "hom" || kw == "lift" || kw == "intersect" ||
                   kw == "ext-check" || kw == "gcs-check" || kw == "tduality" || kw == "tfold") {
            // name resolution for bundle-referencing commands
            std::size_t names = 0;
            if (kw == "cohomology" || kw == "lift") names = 1;
            if (kw == "hom" || kw == "intersect" || kw == "ext-check") names = 2;
            if (names > 0 && !s.torus) throw SessionError(lineno, "no torus declared");
            if (fields.size() < 1 + names) throw SessionError(lineno, kw + " needs " + std::to_string(names) + " bundle name(s)");
            for (std::size_t i = 1; i <= names; ++i)
                if (!s.bundles.count(fields[i]))
                    throw SessionError(lineno, "unknown name '" + fields[i] + "'");
            if (kw == "gcs-check" && !s.torus) throw SessionError(lineno, "no torus declared");
            s.commands.push_back(Statement{lineno, fields});
        } else {
            throw SessionError(lineno, "unknown statement '" + kw + "'");
        }
    }
    return s;
}

struct RunOptions {
    bool records = false;  // machine-readable key=value output
    bool assert_mode = false; // exit 1 when a verification reports failure
};

/// Execute the commands of a parsed session. Returns 0 on success, 1 when a
/// verification failed under --assert.
inline int run(const Session& s, std::ostream& out, const RunOptions& opt = {}) {
    using namespace session_detail;
    bool any_failed = false;

    for (const auto& cmd : s.commands) {
        const auto& f = cmd.fields;
        const std::string& kw = f[0];
        std::ostringstream os;

        if (kw == "cohomology") {
            GradedDims d = cohomology_dims(s.bundles.at(f[1]));
            if (opt.records)
                os << "cmd=cohomology name=" << f[1] << " h=" << fmt_int_vector(d.dims, true);
            else
                os << "cohomology " << f[1] << ": h = " << fmt_int_vector(d.dims, false);
        } else if (kw == "hom") {
            GradedDims d = hom_B(s.bundles.at(f[1]), s.bundles.at(f[2]));
            if (opt.records)
                os << "cmd=hom from=" << f[1] << " to=" << f[2] << " h=" << fmt_int_vector(d.dims, true);
            else
                os << "hom " << f[1] << " " << f[2] << ": h = " << fmt_int_vector(d.dims, false);
        } else if (kw == "lift") {
            Lift l = lift_bundle(s.bundles.at(f[1]));
            if (opt.records)
                os << "cmd=lift name=" << f[1] << " A=" << l.a.str()
                   << " b=" << fmt_rat_vector(l.b.coords, true);
            else
                os << "lift " << f[1] << ": A = " << l.a.str()
                   << " b = " << fmt_rat_vector(l.b.coords, false);
        } else if (kw == "intersect") {
            AffineSubgroup g = intersect_lifts(s.bundles.at(f[1]), s.bundles.at(f[2]));
            if (g.empty) {
                if (opt.records)
                    os << "cmd=intersect from=" << f[1] << " to=" << f[2] << " empty=yes";
                else
                    os << "intersect: empty";
            } else if (opt.records) {
                os << "cmd=intersect from=" << f[1] << " to=" << f[2] << " empty=no"
                   << " free-rank=" << g.finite.free_rank
                   << " factors=" << fmt_int_vector(g.finite.invariant_factors, true)
                   << " order=" << g.order()
                   << " point=" << fmt_rat_vector(g.point.coords, true);
            } else {
                os << "intersect: free rank = " << g.finite.free_rank
                   << " factors = " << fmt_int_vector(g.finite.invariant_factors, false)
                   << " order = " << g.order()
                   << " point = " << fmt_rat_vector(g.point.coords, false);
            }
        } else if (kw == "ext-check") {
            ExtIntersectionReport rep =
                verify_ext_intersection(s.bundles.at(f[1]), s.bundles.at(f[2]));
            bool ok = !rep.equal_chern || rep.floer_agrees;
            if (!ok) any_failed = true;
            if (opt.records) {
                os << "cmd=ext-check from=" << f[1] << " to=" << f[2]
                   << " hom=" << fmt_int_vector(rep.hom.dims, true)
                   << " total=" << rep.hom.total()
                   << " intersection=" << (rep.intersection.empty ? Int(0) : rep.intersection.order())
                   << " equal-chern=" << (rep.equal_chern ? "yes" : "no")
                   << " agree=" << (rep.equal_chern ? (rep.floer_agrees ? "yes" : "no") : "n/a")
                   << " squared=" << (rep.squared_count_holds ? "yes" : "no");
            } else {
                os << "ext-check " << f[1] << " " << f[2] << ": hom = "
                   << fmt_int_vector(rep.hom.dims, false) << " total = " << rep.hom.total()
                   << " intersection = " << (rep.intersection.empty ? Int(0) : rep.intersection.order());
                if (rep.equal_chern)
                    os << " floer " << (rep.floer_agrees ? "agrees" : "DISAGREES");
                else
                    os << " squared-count " << (rep.squared_count_holds ? "holds" : "fails");
            }
        } else if (kw == "gcs-check") {
            const ComplexTorus& x = *s.torus;
            DoubledTorus dbl = make_doubled(x);
            RatMat jj = lift_gcs_complex(x);
            RatMat gm = generalized_metric(RatMat::identity(2 * x.g), RatMat::zero(2 * x.g, 2 * x.g));
            bool ok_j = is_almost_gcs(jj, dbl);
            bool ok_g = (gm * gm == RatMat::identity(4 * x.g));
            // omega = J is the Kaehler form of the flat metric g = I when J is
            // compatible with it, i.e. antisymmetric
            bool compat = x.j.is_alternating();
            bool ok_w = false, ok_k = false;
            if (compat) {
                RatMat jw = lift_gcs_symplectic(x.j);
                ok_w = is_almost_gcs(jw, dbl);
                ok_k = (jw == gm * jj) && (jw == jj * gm);
            }
            bool ok = ok_j && ok_g && (!compat || (ok_w && ok_k));
            if (!ok) any_failed = true;
            auto yn = [&](bool b) { return compat ? (b ? "yes" : "no") : "n/a"; };
            if (opt.records)
                os << "cmd=gcs-check complex=" << (ok_j ? "yes" : "no")
                   << " symplectic=" << yn(ok_w) << " metric=" << (ok_g ? "yes" : "no")
                   << " kahler=" << yn(ok_k);
            else
                os << "gcs-check: complex " << (ok_j ? "ok" : "FAIL") << ", symplectic "
                   << (compat ? (ok_w ? "ok" : "FAIL") : "n/a") << ", metric "
                   << (ok_g ? "ok" : "FAIL") << ", kahler "
                   << (compat ? (ok_k ? "ok" : "FAIL") : "n/a");
        } else if (kw == "tduality") {
            auto get = [&](std::size_t i, const char* key) {
                std::string prefix = std::string(key) + "=";
                if (i >= f.size() || f[i].compare(0, prefix.size(), prefix) != 0)
                    throw SessionError(cmd.line, std::string("expected ") + key + "=...");
                return f[i].substr(prefix.size());
            };
            Int n = parse_int(get(1, "n"), cmd.line);
            Int w = parse_int(get(2, "w"), cmd.line);
            Rat radius = parse_rat(get(3, "R"), cmd.line);
            Rat alpha = parse_rat(get(4, "a"), cmd.line);
            Rat m2 = mass_squared(n, w, radius, alpha);
            CircleParams dual = t_dual_params(n, w, radius, alpha);
            Rat m2d = mass_squared(dual.n_mom, dual.w, dual.radius, alpha);
            bool invariant = (m2 == m2d);
            if (!invariant) any_failed = true;
            if (opt.records)
                os << "cmd=tduality M2=" << m2 << " dual-n=" << dual.n_mom << " dual-w=" << dual.w
                   << " dual-R=" << dual.radius << " invariant=" << (invariant ? "yes" : "no");
            else
                os << "tduality: M2 = " << m2 << " dual (n, w, R) = (" << dual.n_mom << ", "
                   << dual.w << ", " << dual.radius << ") invariant "
                   << (invariant ? "yes" : "NO");
        } else if (kw == "tfold") {
            if (f.size() >= 2 && f[1] == "nilfold") {
                Int m = 0;
                char pol = 0;
                for (std::size_t i = 2; i < f.size(); ++i) {
                    if (f[i].rfind("m=", 0) == 0) m = parse_int(f[i].substr(2), cmd.line);
                    else if (f[i].rfind("polarization=", 0) == 0 && f[i].size() == 14)
                        pol = f[i][13];
                    else throw SessionError(cmd.line, "bad tfold nilfold field '" + f[i] + "'");
                }
                if (pol == 0) throw SessionError(cmd.line, "missing polarization=<G|H|T>");
                IntMat mon = nilfold_doubled(m);
                bool ok;
                try {
                    ok = polarization_well_defined(nilfold_polarization(pol), mon);
                } catch (const Error& e) {
                    throw SessionError(cmd.line, e.what());
                }
                if (!ok) any_failed = true;
                if (opt.records)
                    os << "cmd=tfold-nilfold m=" << m << " polarization=" << pol
                       << " global=" << (ok ? "yes" : "no");
                else
                    os << "polarization " << pol << ": "
                       << (ok ? "globally defined" : "not globally defined");
            } else if (f.size() >= 3 && f[1] == "decompose") {
                PolyMat h = parse_poly_matrix(f[2], cmd.line);
                if (h.rows() % 2 != 0) throw SessionError(cmd.line, "H must be 2n x 2n");
                try {
                    auto [g, b] = gen_metric_decompose(h, h.rows() / 2);
                    if (opt.records)
                        os << "cmd=tfold-decompose g=" << g.str() << " B=" << b.str();
                    else
                        os << "decompose: g = " << g.str() << " B = " << b.str();
                } catch (const Error& e) {
                    throw SessionError(cmd.line, e.what());
                }
            } else {
                throw SessionError(cmd.line, "expected 'tfold nilfold ...' or 'tfold decompose ...'");
            }
        }

        out << os.str() << "\n";
    }
    return (opt.assert_mode && any_failed) ? 1 : 0;
}

} // namespace toruslift
