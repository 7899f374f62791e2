#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "homlie/hom_assoc.hpp"

namespace homlie {

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("ParseError",
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    message),
          line(line),
          column(column),
          message(message) {}
    std::size_t line, column;
    std::string message;
};

enum class HlaKind { Lie, Assoc, Action };

struct FieldSpec {
    enum class Tag { Q, Fp, Qsqrt } tag = Tag::Q;
    long param = 0;  // p for Fp, d for Qsqrt
    std::string name() const {
        switch (tag) {
            case Tag::Q: return "Q";
            case Tag::Fp: return "F " + std::to_string(param);
            case Tag::Qsqrt: return "Qsqrt " + std::to_string(param);
        }
        return "?";
    }
};

struct HlaEntry {
    enum class Type { Bracket, Prod, Act, Alpha } type;
    std::size_t i = 0, j = 0;  // 1-based; Alpha uses only i
    std::vector<std::string> coeffs;
    std::size_t line = 0;
};

// Line-oriented document: '#' comments, blank lines ignored, omitted entries
// are zero, 1-based indices.
struct HlaDocument {
    int version = 1;
    FieldSpec field;
    HlaKind kind = HlaKind::Lie;
    std::size_t dim = 0;             // lie/assoc
    std::size_t dim_l = 0, dim_m = 0;  // action
    std::vector<HlaEntry> entries;
    std::vector<std::string> comments;
};

namespace fmtdetail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline bool parse_size(const std::string& tok, std::size_t& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoull(tok);
    return true;
}

inline bool parse_long(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    out = std::stol(tok);
    return true;
}

// merges standalone "w" tokens into the preceding coefficient
inline std::vector<std::string> merge_w(const std::vector<std::string>& toks, std::size_t line) {
    std::vector<std::string> out;
    for (const auto& t : toks) {
        if (t == "w") {
            if (out.empty()) throw ParseError(line, 1, "dangling 'w'");
            out.back() += " w";
        } else {
            out.push_back(t);
        }
    }
    return out;
}

inline bool valid_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false, denom = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (slash ? denom : digits) = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || denom);
}

}  // namespace fmtdetail

inline HlaDocument parse_hla(const std::string& text) {
    HlaDocument doc;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool have_version = false, have_field = false, have_kind = false, have_dim = false;
    // duplicate detection per (type, i, j)
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) {
            if (pos == line.find_first_not_of(" \t"))
                doc.comments.push_back(line.substr(pos));
            line = line.substr(0, pos);
        }
        auto toks = fmtdetail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (!have_version) {
            if (head != "hla" || toks.size() != 2 || toks[1] != "1")
                throw ParseError(lineno, 1, "expected header 'hla 1'");
            have_version = true;
            continue;
        }
        if (head == "field") {
            if (have_field) throw ParseError(lineno, 1, "duplicate field line");
            if (toks.size() == 2 && toks[1] == "Q") {
                doc.field = {FieldSpec::Tag::Q, 0};
            } else if (toks.size() == 3 && toks[1] == "F") {
                long p;
                if (!fmtdetail::parse_long(toks[2], p) || p <= 0)
                    throw ParseError(lineno, 1, "bad prime in 'field F <p>'");
                doc.field = {FieldSpec::Tag::Fp, p};
            } else if (toks.size() == 3 && toks[1] == "Qsqrt") {
                long d;
                if (!fmtdetail::parse_long(toks[2], d))
                    throw ParseError(lineno, 1, "bad integer in 'field Qsqrt <d>'");
                doc.field = {FieldSpec::Tag::Qsqrt, d};
            } else {
                throw ParseError(lineno, 1, "expected 'field Q', 'field F <p>' or 'field Qsqrt <d>'");
            }
            have_field = true;
            continue;
        }
        if (head == "kind") {
            if (have_kind) throw ParseError(lineno, 1, "duplicate kind line");
            if (toks.size() != 2) throw ParseError(lineno, 1, "expected 'kind lie|assoc|action'");
            if (toks[1] == "lie") doc.kind = HlaKind::Lie;
            else if (toks[1] == "assoc") doc.kind = HlaKind::Assoc;
            else if (toks[1] == "action") doc.kind = HlaKind::Action;
            else throw ParseError(lineno, 1, "unknown kind '" + toks[1] + "'");
            have_kind = true;
            continue;
        }
        if (head == "dim" || head == "dims") {
            if (!have_kind) throw ParseError(lineno, 1, "kind must precede dim");
            if (have_dim) throw ParseError(lineno, 1, "duplicate dim line");
            if (doc.kind == HlaKind::Action) {
                if (head != "dims" || toks.size() != 3 ||
                    !fmtdetail::parse_size(toks[1], doc.dim_l) ||
                    !fmtdetail::parse_size(toks[2], doc.dim_m))
                    throw ParseError(lineno, 1, "expected 'dims <nL> <nM>' for an action");
            } else {
                if (head != "dim" || toks.size() != 2 || !fmtdetail::parse_size(toks[1], doc.dim))
                    throw ParseError(lineno, 1, "expected 'dim <n>'");
            }
            have_dim = true;
            continue;
        }
        if (head == "bracket" || head == "prod" || head == "act" || head == "alpha") {
            if (!have_field || !have_kind || !have_dim)
                throw ParseError(lineno, 1, "entry before field/kind/dim header");
            auto colon = std::find(toks.begin(), toks.end(), ":");
            if (colon == toks.end()) throw ParseError(lineno, 1, "missing ':' in entry");
            std::vector<std::string> lhs(toks.begin() + 1, colon);
            std::vector<std::string> rhs(colon + 1, toks.end());
            rhs = fmtdetail::merge_w(rhs, lineno);

            HlaEntry e;
            e.line = lineno;
            e.coeffs = rhs;
            std::size_t expected_len = 0;
            if (head == "alpha") {
                if (doc.kind == HlaKind::Action)
                    throw ParseError(lineno, 1, "alpha lines are not allowed in action files");
                e.type = HlaEntry::Type::Alpha;
                if (lhs.size() != 1 || !fmtdetail::parse_size(lhs[0], e.i))
                    throw ParseError(lineno, 1, "expected 'alpha <i> : ...'");
                if (e.i < 1 || e.i > doc.dim) throw ParseError(lineno, 1, "alpha index out of range");
                expected_len = doc.dim;
            } else {
                if (lhs.size() != 2 || !fmtdetail::parse_size(lhs[0], e.i) ||
                    !fmtdetail::parse_size(lhs[1], e.j))
                    throw ParseError(lineno, 1, "expected '" + head + " <i> <j> : ...'");
                if (head == "bracket") {
                    if (doc.kind != HlaKind::Lie)
                        throw ParseError(lineno, 1, "bracket lines require kind lie");
                    e.type = HlaEntry::Type::Bracket;
                    if (e.i < 1 || e.j < 1 || e.i > doc.dim || e.j > doc.dim)
                        throw ParseError(lineno, 1, "bracket index out of range");
                    if (e.i >= e.j)
                        throw ParseError(lineno, 1, "bracket requires i < j (the mirror is generated)");
                    expected_len = doc.dim;
                } else if (head == "prod") {
                    if (doc.kind != HlaKind::Assoc)
                        throw ParseError(lineno, 1, "prod lines require kind assoc");
                    e.type = HlaEntry::Type::Prod;
                    if (e.i < 1 || e.j < 1 || e.i > doc.dim || e.j > doc.dim)
                        throw ParseError(lineno, 1, "prod index out of range");
                    expected_len = doc.dim;
                } else {
                    if (doc.kind != HlaKind::Action)
                        throw ParseError(lineno, 1, "act lines require kind action");
                    e.type = HlaEntry::Type::Act;
                    if (e.i < 1 || e.i > doc.dim_l || e.j < 1 || e.j > doc.dim_m)
                        throw ParseError(lineno, 1, "act index out of range");
                    expected_len = doc.dim_m;
                }
            }
            if (e.coeffs.size() != expected_len)
                throw ParseError(lineno, 1,
                                 "expected " + std::to_string(expected_len) + " coefficients, got " +
                                     std::to_string(e.coeffs.size()));
            auto key = std::make_tuple(static_cast<int>(e.type), e.i, e.j);
            if (auto it = seen.find(key); it != seen.end())
                throw ParseError(lineno, 1,
                                 "duplicate entry (first seen at line " + std::to_string(it->second) + ")");
            seen[key] = lineno;
            doc.entries.push_back(std::move(e));
            continue;
        }
        throw ParseError(lineno, 1, "unknown directive '" + head + "'");
    }
    if (!have_version) throw ParseError(1, 1, "empty document, expected 'hla 1'");
    if (!have_field) throw ParseError(lineno, 1, "missing field line");
    if (!have_kind) throw ParseError(lineno, 1, "missing kind line");
    if (!have_dim) throw ParseError(lineno, 1, "missing dim line");
    return doc;
}

// scalar literal parsing, per field

template <ExactField K>
K parse_scalar(const std::string& tok, typename K::Desc desc, std::size_t line);

inline mpq_class parse_mpq(const std::string& tok, std::size_t line) {
    if (!fmtdetail::valid_rational_literal(tok))
        throw ParseError(line, 1, "bad rational literal '" + tok + "'");
    std::string s = tok[0] == '+' ? tok.substr(1) : tok;
    mpq_class v(s);
    v.canonicalize();
    return v;
}

template <>
inline Rational parse_scalar<Rational>(const std::string& tok, Rational::Desc, std::size_t line) {
    return Rational(parse_mpq(tok, line));
}

template <>
inline PrimeField parse_scalar<PrimeField>(const std::string& tok, PrimeField::Desc desc,
                                           std::size_t line) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        long v;
        if (!fmtdetail::parse_long(tok, v)) throw ParseError(line, 1, "bad GF(p) literal '" + tok + "'");
        return PrimeField(desc, v);
    }
    long num, den;
    if (!fmtdetail::parse_long(tok.substr(0, slash), num) ||
        !fmtdetail::parse_long(tok.substr(slash + 1), den) || den == 0)
        throw ParseError(line, 1, "bad GF(p) literal '" + tok + "'");
    return PrimeField(desc, num) / PrimeField(desc, den);
}

template <>
inline QuadExt parse_scalar<QuadExt>(const std::string& tok, QuadExt::Desc desc, std::size_t line) {
    std::string s = tok;
    bool has_w = false;
    if (s.size() >= 1 && s.back() == 'w') {
        has_w = true;
        s.pop_back();
        while (!s.empty() && s.back() == ' ') s.pop_back();
    }
    if (!has_w) return QuadExt(desc, parse_mpq(s, line), mpq_class(0));
    // split "A+B" / "A-B" at the last sign not in position 0
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "-" || s == "+") {
            mpq_class b(s == "-" ? -1 : 1);
            return QuadExt(desc, mpq_class(0), b);
        }
        return QuadExt(desc, mpq_class(0), parse_mpq(s, line));
    }
    mpq_class a = parse_mpq(s.substr(0, split), line);
    std::string bs = s.substr(split);
    mpq_class b = bs == "-" ? mpq_class(-1) : bs == "+" ? mpq_class(1) : parse_mpq(bs, line);
    return QuadExt(desc, a, b);
}

template <ExactField K>
typename K::Desc desc_of_field(const FieldSpec& f);

template <>
inline Rational::Desc desc_of_field<Rational>(const FieldSpec&) { return {}; }
template <>
inline PrimeField::Desc desc_of_field<PrimeField>(const FieldSpec& f) {
    return PrimeField::make_desc(static_cast<std::uint32_t>(f.param));
}
template <>
inline QuadExt::Desc desc_of_field<QuadExt>(const FieldSpec& f) {
    return QuadExt::make_desc(f.param);
}

// typed builders; validation is left to the caller

template <ExactField K>
std::pair<Tensor3<K>, Matrix<K>> build_lie_data(const HlaDocument& doc, typename K::Desc desc) {
    if (doc.kind != HlaKind::Lie) throw ShapeError("document is not kind lie");
    const std::size_t n = doc.dim;
    Tensor3<K> c(n, n, n, desc);
    Matrix<K> alpha(n, n, desc);
    for (const auto& e : doc.entries) {
        Vec<K> v;
        v.reserve(e.coeffs.size());
        for (const auto& t : e.coeffs) v.push_back(parse_scalar<K>(t, desc, e.line));
        if (e.type == HlaEntry::Type::Bracket) {
            c.set_slice(e.i - 1, e.j - 1, v);
            c.set_slice(e.j - 1, e.i - 1, vec_neg(v));
        } else {
            alpha.set_col(e.i - 1, v);
        }
    }
    return {std::move(c), std::move(alpha)};
}

template <ExactField K>
std::pair<Tensor3<K>, Matrix<K>> build_assoc_data(const HlaDocument& doc, typename K::Desc desc) {
    if (doc.kind != HlaKind::Assoc) throw ShapeError("document is not kind assoc");
    const std::size_t n = doc.dim;
    Tensor3<K> p(n, n, n, desc);
    Matrix<K> alpha(n, n, desc);
    for (const auto& e : doc.entries) {
        Vec<K> v;
        v.reserve(e.coeffs.size());
        for (const auto& t : e.coeffs) v.push_back(parse_scalar<K>(t, desc, e.line));
        if (e.type == HlaEntry::Type::Prod) p.set_slice(e.i - 1, e.j - 1, v);
        else alpha.set_col(e.i - 1, v);
    }
    return {std::move(p), std::move(alpha)};
}

template <ExactField K>
Tensor3<K> build_action_data(const HlaDocument& doc, typename K::Desc desc) {
    if (doc.kind != HlaKind::Action) throw ShapeError("document is not kind action");
    Tensor3<K> a(doc.dim_l, doc.dim_m, doc.dim_m, desc);
    for (const auto& e : doc.entries) {
        Vec<K> v;
        v.reserve(e.coeffs.size());
        for (const auto& t : e.coeffs) v.push_back(parse_scalar<K>(t, desc, e.line));
        a.set_slice(e.i - 1, e.j - 1, v);
    }
    return a;
}

// canonical emission: header, sorted nonzero entries, then nonzero alpha columns
inline std::string emit_hla(const HlaDocument& doc) {
    std::ostringstream out;
    out << "hla " << doc.version << "\n";
    out << "field " << doc.field.name() << "\n";
    out << "kind "
        << (doc.kind == HlaKind::Lie ? "lie" : doc.kind == HlaKind::Assoc ? "assoc" : "action")
        << "\n";
    if (doc.kind == HlaKind::Action)
        out << "dims " << doc.dim_l << " " << doc.dim_m << "\n";
    else
        out << "dim " << doc.dim << "\n";
    std::vector<HlaEntry> sorted = doc.entries;
    std::sort(sorted.begin(), sorted.end(), [](const HlaEntry& a, const HlaEntry& b) {
        if (a.type != b.type) return static_cast<int>(a.type) < static_cast<int>(b.type);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    for (const auto& e : sorted) {
        bool nonzero = false;
        for (const auto& cstr : e.coeffs)
            if (cstr != "0") nonzero = true;
        if (!nonzero) continue;
        switch (e.type) {
            case HlaEntry::Type::Bracket: out << "bracket " << e.i << " " << e.j; break;
            case HlaEntry::Type::Prod: out << "prod " << e.i << " " << e.j; break;
            case HlaEntry::Type::Act: out << "act " << e.i << " " << e.j; break;
            case HlaEntry::Type::Alpha: out << "alpha " << e.i; break;
        }
        out << " :";
        for (const auto& cstr : e.coeffs) out << " " << cstr;
        out << "\n";
    }
    return out.str();
}

// documents from typed objects (coefficients in canonical scalar syntax)

template <ExactField K>
HlaDocument document_of_lie(const HomLieAlgebra<K>& l, const FieldSpec& field) {
    HlaDocument doc;
    doc.field = field;
    doc.kind = HlaKind::Lie;
    doc.dim = l.dim();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            HlaEntry e{HlaEntry::Type::Bracket, i + 1, j + 1, residual_strings(l.bracket(i, j)), 0};
            doc.entries.push_back(std::move(e));
        }
    for (std::size_t i = 0; i < l.dim(); ++i) {
        HlaEntry e{HlaEntry::Type::Alpha, i + 1, 0, residual_strings(l.alpha().col(i)), 0};
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

template <ExactField K>
HlaDocument document_of_assoc(const HomAssocAlgebra<K>& a, const FieldSpec& field) {
    HlaDocument doc;
    doc.field = field;
    doc.kind = HlaKind::Assoc;
    doc.dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            HlaEntry e{HlaEntry::Type::Prod, i + 1, j + 1, residual_strings(a.prod(i, j)), 0};
            doc.entries.push_back(std::move(e));
        }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        HlaEntry e{HlaEntry::Type::Alpha, i + 1, 0, residual_strings(a.alpha().col(i)), 0};
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

}  // namespace homlie
