#include "hallp1/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hallp1 {

using nlohmann::json;

json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return json(static_cast<long long>(n.get_si()));
    return json(n.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

json rat_to_json(const Rat& r) {
    return json::array({int_to_json(r.get_num()), int_to_json(r.get_den())});
}

Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    Rat r(int_from_json(j[0]), int_from_json(j[1]));
    r.canonicalize();
    if (r.get_den() < 0) throw std::invalid_argument("rational denominator must be positive");
    return r;
}

json coeff_to_json(const Coeff& c) {
    return json{{"a", rat_to_json(c.a())}, {"b", rat_to_json(c.b())}};
}

Coeff coeff_from_json(const json& j, long q) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("coefficient must be {\"a\": ..., \"b\": ...}");
    return Coeff(rat_from_json(j.at("a")), rat_from_json(j.at("b")), q);
}

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int part : p) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    Partition p;
    for (const auto& part : j) p.push_back(part.get<int>());
    check_partition(p);
    return p;
}

json point_to_json(const ClosedPoint& x) {
    if (x.at_infinity) return json("inf");
    json arr = json::array();
    for (int c : x.minimal.c) arr.push_back(c);
    return arr;
}

ClosedPoint point_from_json(const json& j, long q) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ClosedPoint::infinity(q);
        throw std::invalid_argument("unknown point name: " + j.get<std::string>());
    }
    if (!j.is_array()) throw std::invalid_argument("point must be \"inf\" or a coefficient list");
    std::vector<int> c;
    for (const auto& e : j) c.push_back(e.get<int>());
    return ClosedPoint::finite(FqPoly{q, std::move(c)});
}

json torsion_class_to_json(const TorsionClass& c) {
    json arr = json::array();
    for (const auto& [x, lam] : c.parts)
        arr.push_back(json::array({point_to_json(x), partition_to_json(lam)}));
    return arr;
}

TorsionClass torsion_class_from_json(const json& j, long q) {
    if (!j.is_array()) throw std::invalid_argument("torsion class must be a list of [point, partition]");
    TorsionClass c = TorsionClass::trivial();
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("torsion class entry must be [point, partition]");
        ClosedPoint x = point_from_json(entry[0], q);
        Partition lam = partition_from_json(entry[1]);
        c = c.with(x, lam);
    }
    return c;
}

json torsion_element_to_json(const TorsionElement& e) {
    json arr = json::array();
    for (const auto& [cls, coef] : e.terms)
        arr.push_back(json::array({torsion_class_to_json(cls), coeff_to_json(coef)}));
    return arr;
}

TorsionElement torsion_element_from_json(const json& j, long q) {
    if (!j.is_array()) throw std::invalid_argument("torsion element must be a list of [class, coeff]");
    TorsionElement e = TorsionElement::zero(q);
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("torsion element entry must be [class, coeff]");
        e.add_term(torsion_class_from_json(entry[0], q), coeff_from_json(entry[1], q));
    }
    return e;
}

json sheaf_class_to_json(const SheafClass& c) {
    json bundle = json::array();
    for (const auto& [n, mult] : c.bundle) bundle.push_back(json::array({n, mult}));
    return json{{"bundle", bundle}, {"torsion", torsion_class_to_json(c.torsion)}};
}

SheafClass sheaf_class_from_json(const json& j, long q) {
    if (!j.is_object() || !j.contains("bundle") || !j.contains("torsion"))
        throw std::invalid_argument("sheaf class must be {\"bundle\": ..., \"torsion\": ...}");
    SheafClass c = SheafClass::zero_sheaf();
    for (const auto& entry : j.at("bundle")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("bundle entry must be [twist, multiplicity]");
        int n = entry[0].get<int>();
        int mult = entry[1].get<int>();
        if (mult <= 0) throw std::invalid_argument("bundle multiplicity must be positive");
        if (c.bundle.count(n)) throw std::invalid_argument("duplicate twist in bundle");
        c.bundle[n] = mult;
    }
    c.torsion = torsion_class_from_json(j.at("torsion"), q);
    return c;
}

json hall_element_to_json(const HallElement& e) {
    json terms = json::array();
    for (const auto& [cls, coef] : e.terms)
        terms.push_back(json{{"class", sheaf_class_to_json(cls)}, {"coeff", coeff_to_json(coef)}});
    return json{{"terms", terms}};
}

HallElement hall_element_from_json(const json& j, long q) {
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("element must be {\"terms\": [...]}");
    HallElement e = HallElement::zero(q);
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("class") || !term.contains("coeff"))
            throw std::invalid_argument("term must be {\"class\": ..., \"coeff\": ...}");
        e.add_term(sheaf_class_from_json(term.at("class"), q), coeff_from_json(term.at("coeff"), q));
    }
    return e;
}

json pbw_monomial_to_json(const PBWMonomial& m) {
    json c = json::array();
    for (const auto& [n, mult] : m.c) c.push_back(json::array({n, mult}));
    json d = json::array();
    for (const auto& [r, exp] : m.d) d.push_back(json::array({r, exp}));
    return json{{"c", c}, {"d", d}};
}

PBWMonomial pbw_monomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("c") || !j.contains("d"))
        throw std::invalid_argument("basis monomial must be {\"c\": ..., \"d\": ...}");
    PBWMonomial m = PBWMonomial::unit();
    for (const auto& entry : j.at("c")) {
        int n = entry.at(0).get<int>();
        int mult = entry.at(1).get<int>();
        if (mult <= 0) throw std::invalid_argument("monomial multiplicity must be positive");
        if (m.c.count(n)) throw std::invalid_argument("duplicate twist in monomial");
        m.c[n] = mult;
    }
    for (const auto& entry : j.at("d")) {
        int r = entry.at(0).get<int>();
        int exp = entry.at(1).get<int>();
        if (r <= 0 || exp <= 0) throw std::invalid_argument("loop generator indices must be positive");
        if (m.d.count(r)) throw std::invalid_argument("duplicate loop index in monomial");
        m.d[r] = exp;
    }
    return m;
}

json b_element_to_json(const BElement& e, long q) {
    (void)q;
    json terms = json::array();
    for (const auto& [mono, coef] : e)
        terms.push_back(json{{"class", pbw_monomial_to_json(mono)}, {"coeff", coeff_to_json(coef)}});
    return json{{"terms", terms}};
}

BElement b_element_from_json(const json& j, long q) {
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("element must be {\"terms\": [...]}");
    BElement e;
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("class") || !term.contains("coeff"))
            throw std::invalid_argument("term must be {\"class\": ..., \"coeff\": ...}");
        b_add_term(e, pbw_monomial_from_json(term.at("class")), coeff_from_json(term.at("coeff"), q));
    }
    return e;
}

json iso_report_to_json(const IsoReport& r) {
    json mism = json::array();
    for (const auto& m : r.mismatches) mism.push_back(json{{"item", m.item}, {"detail", m.detail}});
    return json{{"q", r.q},
                {"max_total_degree", r.max_total_degree},
                {"checked", r.checked},
                {"mismatches", mism}};
}

}  // namespace hallp1
