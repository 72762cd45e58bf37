#include "wittkernel/commands.hpp"

#include "wittkernel/genus_one.hpp"
#include "wittkernel/parse.hpp"
#include "wittkernel/quadric.hpp"

namespace wk {

namespace {

std::string pm(int v) { return v == 1 ? "+1" : "-1"; }

std::string extension_name(const SquareClass& e) {
    return e.is_one() ? "Q" : "Q(sqrt(" + e.to_string() + "))";
}

nlohmann::ordered_json places_json(const std::vector<PlaceQ>& places) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PlaceQ& v : places) arr.push_back(v.to_string());
    return arr;
}

nlohmann::ordered_json algebra_json(const QuaternionAlgebra& B) {
    nlohmann::ordered_json o;
    o["a"] = B.a.to_string();
    o["b"] = B.b.to_string();
    return o;
}

nlohmann::ordered_json kernel_json(const BrauerKernel& k) {
    nlohmann::ordered_json o;
    o["kind"] = k.kind_name();
    if (k.kind == KernelKind::Order2) {
        o["generator"] = algebra_json(*k.witness);
        o["ramification"] = places_json(k.ramification);
    }
    if (k.kind == KernelKind::Cyclic) o["generator"] = k.cyclic_generator->to_string();
    return o;
}

void add_symbol_rows(Report& rep, const std::string& name, const QuaternionAlgebra& B) {
    for (const PlaceQ& v :
         relevant_places(Rational(B.a.value()), Rational(B.b.value())))
        rep.invariant(name, v.to_string(), pm(hilbert_symbol(B.a, B.b, v)));
}

void add_form_rows(Report& rep, const std::string& label, const QuadraticForm& q) {
    for (const PlaceQ& v : relevant_places(q)) {
        rep.invariant("hasse(" + label + ")", v.to_string(), pm(hasse_invariant(q, v)));
        rep.invariant("witt(" + label + ")", v.to_string(), pm(witt_invariant(q, v)));
    }
}

std::string isogeny_name(FieldsIsogeny f) {
    switch (f) {
    case FieldsIsogeny::BothRational: return "BothRational";
    case FieldsIsogeny::Isomorphic: return "Isomorphic";
    default: return "NotIsogenous";
    }
}

} // namespace

Report cmd_hilbert(const std::string& a_text, const std::string& b_text,
                   const std::optional<std::string>& place_text) {
    Rational a = parse_rational(a_text);
    Rational b = parse_rational(b_text);
    Report rep;
    rep.command = "hilbert";
    rep.input("a", a.to_string());
    rep.input("b", b.to_string());
    if (place_text) {
        PlaceQ v = parse_place(*place_text);
        int s = hilbert_symbol(a, b, v);
        rep.input("place", v.to_string());
        rep.verdict("symbol", static_cast<int64_t>(s));
        rep.invariant("hilbert", v.to_string(), pm(s));
        rep.tag("HilbertSymbol");
        return rep;
    }
    std::vector<PlaceQ> ram;
    for (const PlaceQ& v : relevant_places(a, b)) {
        int s = hilbert_symbol(a, b, v);
        if (s == -1) ram.push_back(v);
        rep.invariant("hilbert", v.to_string(), pm(s));
    }
    if (!reciprocity_check(a, b))
        throw TheoremError("Hilbert reciprocity failed for (" + a.to_string() + "," +
                           b.to_string() + ")");
    rep.verdict("reciprocity", true);
    rep.witness("ramification", places_json(ram));
    rep.tag("HilbertSymbol");
    rep.tag("HilbertReciprocity");
    return rep;
}

Report cmd_conic_classify(const std::string& a_text, const std::string& b_text) {
    QuaternionAlgebra B(SquareClass::of(parse_rational(a_text)),
                        SquareClass::of(parse_rational(b_text)));
    GenusZeroCurve curve{B};
    BrauerKernel kernel = brauer_kernel_conic(curve);
    QuadraticForm form = conic_form(B);

    Report rep;
    rep.command = "conic classify";
    rep.input("a", B.a.to_string());
    rep.input("b", B.b.to_string());
    rep.verdict("split", is_split(B));
    rep.verdict("kernel", kernel.kind_name());
    rep.verdict("index", static_cast<int64_t>(index_of_quadric(form)));
    add_symbol_rows(rep, "hilbert", B);
    rep.witness("conic_form", form.to_string());
    rep.witness("normalized_form", norm_ternary(B).to_string());
    rep.witness("kernel", kernel_json(kernel));
    rep.tag("Witt-Thm12");
    rep.tag("Springer");
    return rep;
}

Report cmd_conic_compare(const std::string& a_text, const std::string& b_text,
                         const std::string& a2_text, const std::string& b2_text) {
    QuaternionAlgebra B1(SquareClass::of(parse_rational(a_text)),
                         SquareClass::of(parse_rational(b_text)));
    QuaternionAlgebra B2(SquareClass::of(parse_rational(a2_text)),
                         SquareClass::of(parse_rational(b2_text)));
    GenusZeroCompare cmp = conic_fields_compare({B1}, {B2});

    Report rep;
    rep.command = "conic compare";
    rep.input("a", B1.a.to_string());
    rep.input("b", B1.b.to_string());
    rep.input("a2", B2.a.to_string());
    rep.input("b2", B2.b.to_string());
    rep.verdict("isomorphic", cmp == GenusZeroCompare::Isomorphic);
    rep.verdict("fields", cmp == GenusZeroCompare::Isomorphic ? "Isomorphic" : "NotIsogenous");
    add_symbol_rows(rep, "hilbert(B)", B1);
    add_symbol_rows(rep, "hilbert(B2)", B2);
    rep.witness("ramification(B)", places_json(ramification_set(B1)));
    rep.witness("ramification(B2)", places_json(ramification_set(B2)));
    rep.tag("Witt-Thm12");
    rep.tag("Thm8");
    return rep;
}

Report cmd_quadric_classify(const std::string& form_text) {
    QuadricSurface x(parse_form(form_text));
    BrauerKernel kernel = brauer_kernel_quadric(x);
    Signature sig = signature(x.form());

    Report rep;
    rep.command = "quadric classify";
    rep.input("q", x.form().to_string());
    rep.verdict("isotropic", x.isotropic());
    rep.verdict("rational_field", x.isotropic());
    rep.verdict("discriminant", x.disc().to_string());
    rep.verdict("signature", "(" + std::to_string(sig.positives) + "," +
                                 std::to_string(sig.negatives) + ")");
    rep.verdict("kernel", kernel.kind_name());
    rep.verdict("index", static_cast<int64_t>(index_of_quadric(x.form())));
    add_form_rows(rep, "q", x.form());
    rep.witness("kernel", kernel_json(kernel));
    rep.tag("HasseMinkowski");
    rep.tag("Prop17");
    rep.tag("Springer");
    return rep;
}

Report cmd_quadric_compare(const std::string& form1_text, const std::string& form2_text) {
    QuadricSurface x(parse_form(form1_text));
    QuadricSurface y(parse_form(form2_text));
    QuadricComparison cmp = theorem8b_decide(x, y);

    Report rep;
    rep.command = "quadric compare";
    rep.input("q", x.form().to_string());
    rep.input("q2", y.form().to_string());
    rep.verdict("isomorphic", cmp.isomorphic);
    rep.verdict("isogenous", isogeny_name(cmp.isogeny));
    rep.verdict("kernels_equal", cmp.kernels_all_equal);
    rep.verdict("separating", cmp.separating_extension
                                  ? "kernel over " + extension_name(*cmp.separating_extension)
                                  : "none");
    add_form_rows(rep, "q", x.form());
    add_form_rows(rep, "q2", y.form());
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const KernelComparisonRow& row : cmp.kernels) {
        nlohmann::ordered_json o;
        o["extension"] = row.extension.to_string();
        o["field"] = extension_name(row.extension);
        o["kernel(q)"] = kernel_json(row.first);
        o["kernel(q2)"] = kernel_json(row.second);
        o["equal"] = row.equal;
        table.push_back(o);
    }
    rep.witness("kernels", table);
    rep.tag("Prop13");
    rep.tag("Ohm-Thm16");
    rep.tag("Prop17");
    rep.tag("Thm15a");
    rep.tag("Thm8b");
    return rep;
}

Report cmd_quadric_kernel(const std::string& form_text,
                          const std::optional<std::string>& ext_text) {
    QuadricSurface x(parse_form(form_text));
    SquareClass e = ext_text ? SquareClass::of(parse_rational(*ext_text)) : SquareClass();
    KernelOverExtension k = kernel_over_quadratic(x, e);

    Report rep;
    rep.command = "quadric kernel";
    rep.input("q", x.form().to_string());
    rep.input("ext", e.to_string());
    rep.verdict("extension", extension_name(e));
    rep.verdict("kernel", k.kernel.kind_name());
    add_form_rows(rep, "q", x.form());
    rep.witness("kernel", kernel_json(k.kernel));
    rep.tag("Prop17");
    rep.tag("Thm15a");
    return rep;
}

Report cmd_sb_compare(const std::string& cls1_text, const std::string& cls2_text,
                      int64_t dim) {
    SBVariety v(dim, parse_brauer_class(cls1_text));
    SBVariety w(dim, parse_brauer_class(cls2_text));
    bool iso = sb_fields_isomorphic(v, w);

    Report rep;
    rep.command = "sb compare";
    rep.input("class", v.cls.to_string());
    rep.input("class2", w.cls.to_string());
    rep.input("dim", std::to_string(dim));
    rep.verdict("isomorphic", iso);
    rep.verdict("order", v.cls.order());
    rep.verdict("order2", w.cls.order());
    rep.tag("Amitsur-Thm13");
    rep.tag("Thm8a");
    return rep;
}

Report cmd_sb_vs_quadric(const std::string& cls_text, const std::string& form_text) {
    SBVariety v(2, parse_brauer_class(cls_text));
    QuadraticForm q = parse_form(form_text);
    SbQuadricVerdict verdict = sb_vs_quadric_decide(v, q);

    Report rep;
    rep.command = "sb vs-quadric";
    rep.input("class", v.cls.to_string());
    rep.input("q", q.to_string());
    rep.verdict("fields_isomorphic", verdict.fields_isomorphic);
    rep.verdict("separating", verdict.fields_isomorphic ? "none" : verdict.separating);
    rep.verdict("kernel_test_inconclusive", verdict.kernel_test_inconclusive);
    rep.tag("Thm8c");
    return rep;
}

Report cmd_genus1_orbit(int64_t modulus, int64_t residue) {
    CyclicTorsorModel t(modulus, residue);
    int64_t n = period(t);
    std::vector<int64_t> orbit = isogeny_orbit(t);

    Report rep;
    rep.command = "genus1 orbit";
    rep.input("m", std::to_string(modulus));
    rep.input("a", std::to_string(residue));
    rep.verdict("period", n);
    rep.verdict("n_c", n_c(n));
    rep.verdict("orbit_size", static_cast<int64_t>(orbit.size()));
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int64_t r : orbit) arr.push_back(r);
    rep.witness("orbit", arr);
    rep.tag("Prop19");
    rep.tag("Cor20");
    return rep;
}

Report cmd_genus1_gate(int64_t period, bool non_cm, bool isolated_or_finite) {
    Report rep;
    rep.command = "genus1 gate";
    rep.input("period", std::to_string(period));
    rep.input("non_cm", non_cm ? "true" : "false");
    rep.input("isolated_or_finite", isolated_or_finite ? "true" : "false");
    rep.verdict("applicable", theorem10_gate(period, non_cm, isolated_or_finite));
    rep.verdict("period_admissible",
                period == 1 || period == 2 || period == 3 || period == 4 || period == 6);
    rep.verdict("candidate_fields", n_c(period));
    rep.tag("Thm10");
    rep.tag("Cor20");
    return rep;
}

} // namespace wk
