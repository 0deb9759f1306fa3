#include "valparam/ordgroup.hpp"

#include <cctype>

#include "valparam/error.hpp"

namespace valparam {

namespace {

std::strong_ordering cmp_rat(const Rat& a, const Rat& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering cmp_int(const Int& a, const Int& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// The cut shared by the operands, or nullopt when both are rational.
std::optional<CutId> common_cut(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_cut() && b.is_cut()) {
        if (!(a.cut() == b.cut())) {
            throw Error(ErrorKind::MixedCuts, to_string(a.cut()) + " vs " + to_string(b.cut()));
        }
        return a.cut();
    }
    if (a.is_cut()) return a.cut();
    if (b.is_cut()) return b.cut();
    return std::nullopt;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

ExtScalar ExtScalar::infinity() {
    ExtScalar x;
    x.kind_ = Kind::Infinity;
    return x;
}

ExtScalar ExtScalar::cut_lin(const CutId& cut, Int m, Rat b) {
    ExtScalar x(std::move(b));
    if (m == 0) return x;
    x.kind_ = Kind::CutLin;
    x.cut_ = cut;
    x.m_ = std::move(m);
    return x;
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case ExtScalar::Kind::Infinity: return true;
        case ExtScalar::Kind::Fin: return a.b_ == b.b_;
        case ExtScalar::Kind::CutLin: return a.cut_ == b.cut_ && a.m_ == b.m_ && a.b_ == b.b_;
    }
    return false;
}

std::strong_ordering ext_cmp(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
        return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    auto cut = common_cut(a, b);
    if (!cut) return cmp_rat(a.offset(), b.offset());

    const Int& m = a.multiplier();
    const Int& n = b.multiplier();
    switch (cut->kind()) {
        case CutId::Kind::Below: {
            // x sits just below q: compare at q, then the larger multiplier loses.
            const Rat& q = cut->point();
            Rat ra = Rat(m) * q + a.offset();
            Rat rb = Rat(n) * q + b.offset();
            if (auto c = cmp_rat(ra, rb); c != 0) return c;
            return cmp_int(n, m);
        }
        case CutId::Kind::Above: {
            const Rat& q = cut->point();
            Rat ra = Rat(m) * q + a.offset();
            Rat rb = Rat(n) * q + b.offset();
            if (auto c = cmp_rat(ra, rb); c != 0) return c;
            return cmp_int(m, n);
        }
        case CutId::Kind::PlusInf:
            if (auto c = cmp_int(m, n); c != 0) return c;
            return cmp_rat(a.offset(), b.offset());
    }
    return std::strong_ordering::equal;
}

ExtScalar ext_add(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_infinity() || b.is_infinity()) {
        // Still reject a mixed-cut sum so errors do not depend on operand order.
        if (a.is_cut() && b.is_cut()) common_cut(a, b);
        return ExtScalar::infinity();
    }
    auto cut = common_cut(a, b);
    if (!cut) return ExtScalar::fin(a.offset() + b.offset());
    return ExtScalar::cut_lin(*cut, a.multiplier() + b.multiplier(), a.offset() + b.offset());
}

ExtScalar ext_scale(const Int& n, const ExtScalar& a) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "ext_scale by a negative integer");
    if (n == 0) return ExtScalar::fin(Rat(0));
    switch (a.kind()) {
        case ExtScalar::Kind::Infinity: return a;
        case ExtScalar::Kind::Fin: return ExtScalar::fin(Rat(n) * a.offset());
        case ExtScalar::Kind::CutLin: return ExtScalar::cut_lin(a.cut(), n * a.multiplier(), Rat(n) * a.offset());
    }
    return a;
}

ExtScalar ext_min(const ExtScalar& a, const ExtScalar& b) { return ext_cmp(a, b) <= 0 ? a : b; }

std::string to_string(const CutId& cut) {
    switch (cut.kind()) {
        case CutId::Kind::Below: return to_string(cut.point()) + "-";
        case CutId::Kind::Above: return to_string(cut.point()) + "+";
        case CutId::Kind::PlusInf: return "inf-";
    }
    return {};
}

CutId parse_cut(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf-" || s == "+inf-") return CutId::plus_inf();
    if (s.size() < 2) throw Error(ErrorKind::Parse, "not a cut: '" + std::string(text) + "'");
    char side = s.back();
    Rat q = parse_rat(s.substr(0, s.size() - 1));
    if (side == '-') return CutId::below(q);
    if (side == '+') return CutId::above(q);
    throw Error(ErrorKind::Parse, "not a cut: '" + std::string(text) + "'");
}

std::string to_string(const ExtScalar& x) {
    switch (x.kind()) {
        case ExtScalar::Kind::Infinity: return "inf";
        case ExtScalar::Kind::Fin: return to_string(x.offset());
        case ExtScalar::Kind::CutLin: break;
    }
    const Int& m = x.multiplier();
    const Rat& b = x.offset();
    std::string cut = to_string(x.cut());
    if (m == 1 && b == 0) return cut;
    std::string out;
    if (m == 1) {
        out = "(" + cut + ")";
    } else if (m == -1) {
        out = "-(" + cut + ")";
    } else {
        out = to_string(m) + "*(" + cut + ")";
    }
    if (b > 0) out += "+" + to_string(b);
    if (b < 0) out += "-" + to_string(Rat(-b));
    return out;
}

ExtScalar parse_ext(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf" || s == "+inf") return ExtScalar::infinity();
    auto open = s.find('(');
    if (open == std::string_view::npos) {
        if (!s.empty() && (s.back() == '-' || s.back() == '+')) return ExtScalar::unit(parse_cut(s));
        return ExtScalar::fin(parse_rat(s));
    }
    auto close = s.find(')', open);
    if (close == std::string_view::npos) throw Error(ErrorKind::Parse, "unbalanced parenthesis in '" + std::string(text) + "'");
    CutId cut = parse_cut(s.substr(open + 1, close - open - 1));

    std::string_view head = trim(s.substr(0, open));
    Int m(1);
    if (head == "-") {
        m = -1;
    } else if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorKind::Parse, "expected '*' before '(' in '" + std::string(text) + "'");
        Rat coeff = parse_rat(head.substr(0, head.size() - 1));
        if (!is_integer(coeff)) throw Error(ErrorKind::Parse, "cut multiplier must be an integer");
        m = coeff.get_num();
    }

    std::string_view tail = trim(s.substr(close + 1));
    Rat b(0);
    if (!tail.empty()) {
        if (tail.front() != '+' && tail.front() != '-') {
            throw Error(ErrorKind::Parse, "expected '+' or '-' after cut in '" + std::string(text) + "'");
        }
        bool neg = tail.front() == '-';
        b = parse_rat(tail.substr(1));
        if (neg) b = -b;
    }
    return ExtScalar::cut_lin(cut, m, b);
}

namespace {

// Sort key placing quasi-cuts on a line: (boundary, side) with side -1 for
// Below, 0 for principal, +1 for Above; the top cut is handled separately.
int side_of(const QuasiCut& c) {
    if (c.is_principal()) return 0;
    return c.cut().kind() == CutId::Kind::Below ? -1 : 1;
}

}  // namespace

std::strong_ordering quasicut_cmp(const QuasiCut& a, const QuasiCut& b) {
    bool a_top = !a.is_principal() && a.cut().kind() == CutId::Kind::PlusInf;
    bool b_top = !b.is_principal() && b.cut().kind() == CutId::Kind::PlusInf;
    if (a_top || b_top) {
        if (a_top && b_top) return std::strong_ordering::equal;
        return a_top ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const Rat& qa = a.is_principal() ? a.point() : a.cut().point();
    const Rat& qb = b.is_principal() ? b.point() : b.cut().point();
    if (auto c = cmp_rat(qa, qb); c != 0) return c;
    return side_of(a) <=> side_of(b);
}

std::string to_string(const QuasiCut& c) {
    return c.is_principal() ? to_string(c.point()) : to_string(c.cut());
}

QuasiCut parse_quasicut(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf") return QuasiCut::gap(CutId::plus_inf());
    if (!s.empty() && (s.back() == '-' || s.back() == '+')) return QuasiCut::gap(parse_cut(s));
    return QuasiCut::principal(parse_rat(s));
}

ExtScalar realize(const QuasiCut& c) {
    return c.is_principal() ? ExtScalar::fin(c.point()) : ExtScalar::unit(c.cut());
}

QuasiCut quasicut_of(const ExtScalar& x) {
    switch (x.kind()) {
        case ExtScalar::Kind::Fin: return QuasiCut::principal(x.offset());
        case ExtScalar::Kind::Infinity: return QuasiCut::gap(CutId::plus_inf());
        case ExtScalar::Kind::CutLin:
            if (x.multiplier() == 1 && x.offset() == 0) return QuasiCut::gap(x.cut());
            break;
    }
    throw Error(ErrorKind::InvalidArgument, "no quasi-cut corresponds to " + to_string(x));
}

ExtScalar sup_of_values(std::span<const Rat> values, const std::optional<QuasiCut>& declared_limit) {
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "sup_of_values of an empty list");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1]) {
            throw Error(ErrorKind::InvalidArgument, "value list decreases at position " + std::to_string(i));
        }
    }
    if (declared_limit) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (quasicut_cmp(QuasiCut::principal(values[i]), *declared_limit) > 0) {
                throw Error(ErrorKind::InconsistentLimit,
                            to_string(values[i]) + " exceeds declared limit " + to_string(*declared_limit));
            }
        }
        return realize(*declared_limit);
    }
    if (values.size() >= 2 && values[values.size() - 1] == values[values.size() - 2]) {
        return ExtScalar::fin(values.back());
    }
    throw Error(ErrorKind::UndeterminedSup, "no declared limit and the values have not stabilized");
}

}  // namespace valparam
