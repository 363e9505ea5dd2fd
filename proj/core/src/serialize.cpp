#include "qfi/serialize.hpp"

namespace qfi {

Json to_json(BigInt const & x)
{
    return x.str();
}

Json to_json(QuadraticField const & field)
{
    return {{"D", field.radicand()}, {"delta", field.delta()}, {"discriminant", field.discriminant()}};
}

Json to_json(QuadraticInteger const & x)
{
    return {{"text", x.to_string()}, {"u", x.u()}, {"v", x.v()}, {"delta", x.field().delta()}, {"norm", x.norm()}};
}

Json to_json(BinaryForm const & f)
{
    return {{"a", f.a}, {"two_b", f.middle()}, {"c", f.c}, {"det", f.determinant()}, {"text", f.to_string()}};
}

Json to_json(Representation const & r)
{
    return {{"x", r.x}, {"y", r.y}, {"value", r.value}};
}

Json to_json(PellSolution const & s)
{
    return {{"T", to_json(s.T)}, {"U", to_json(s.U)}};
}

Json to_json(SplittingType const & t)
{
    if (auto const * s = std::get_if<Split>(&t))
        return {{"type", "split"}, {"n", s->n}};
    if (std::holds_alternative<Inert>(t))
        return {{"type", "inert"}};
    return {{"type", "ramified"}};
}

Json to_json(SplitPrimeIdeal const & P)
{
    return {{"text", P.to_string()}, {"q", P.q()}, {"n", P.n()}, {"l", P.l()}};
}

Json to_json(GeneratorAudit const & a)
{
    return {{"c", a.c}, {"d", a.d}, {"a", a.a}, {"b", a.b}, {"generator", to_json(a.generator)}};
}

Json to_json(Derivation const & d)
{
    return {{"w", to_json(d.w)}, {"z", to_json(d.z)}, {"r", to_json(d.r)}, {"s", to_json(d.s)}};
}

Json to_json(PrincipalityResult const & r)
{
    Json j;
    j["verdict"] = r.verdict;
    j["sign"] = r.sign ? Json(*r.sign) : Json(nullptr);
    j["representation"] = r.representation ? to_json(*r.representation) : Json(nullptr);
    j["generator"] = r.generator ? to_json(*r.generator) : Json(nullptr);
    j["audit"] = r.audit ? to_json(*r.audit) : Json(nullptr);
    return j;
}

Json to_json(Evidence const & e)
{
    Json j;
    j["kind"] = evidence_kind(e);
    std::visit(
        [&j](auto const & v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RabinowitschTable>) {
                Json rows = Json::array();
                for (auto const & row : v.rows)
                    rows.push_back({{"x", row.x}, {"value", row.value}, {"prime", row.prime}});
                j["rows"] = std::move(rows);
            } else if constexpr (std::is_same_v<T, RabinowitschComposite>) {
                j["x"] = v.x;
                j["value"] = v.value;
                j["factor"] = v.factor;
            } else if constexpr (std::is_same_v<T, NonPrincipalIdeal>) {
                j["q"] = v.q;
                j["n"] = v.n;
                j["form"] = to_json(v.form);
                j["route"] = v.route;
            } else if constexpr (std::is_same_v<T, SpecialDiscriminant>) {
                j["discriminant"] = v.discriminant;
            } else if constexpr (std::is_same_v<T, CompositeAbsD>) {
                j["factor"] = v.factor;
            }
        },
        e);
    return j;
}

Json to_json(H1Certificate const & c)
{
    Json j;
    j["D"] = c.D;
    j["verdict"] = c.verdict;
    j["route"] = c.route;
    j["evidence"] = to_json(c.evidence);
    j["cross_check"] = c.cross_check ? to_json(*c.cross_check) : Json(nullptr);
    return j;
}

BinaryForm form_from_json(Json const & j)
{
    Int const two_b = j.at("two_b").get<Int>();
    if (two_b % 2 != 0)
        throw DomainError("form middle coefficient must be even");
    return {j.at("a").get<Int>(), two_b / 2, j.at("c").get<Int>()};
}

Evidence evidence_from_json(Json const & j)
{
    auto const kind = j.at("kind").get<std::string>();
    if (kind == "rabinowitsch_table") {
        RabinowitschTable t;
        for (auto const & row : j.at("rows"))
            t.rows.push_back({row.at("x").get<Int>(), row.at("value").get<Int>(), row.at("prime").get<bool>()});
        return t;
    }
    if (kind == "rabinowitsch_composite")
        return RabinowitschComposite{j.at("x").get<Int>(), j.at("value").get<Int>(), j.at("factor").get<Int>()};
    if (kind == "nonprincipal_ideal")
        return NonPrincipalIdeal{j.at("q").get<Int>(), j.at("n").get<Int>(), form_from_json(j.at("form")),
                                 j.at("route").get<std::string>()};
    if (kind == "special_discriminant")
        return SpecialDiscriminant{j.at("discriminant").get<Int>()};
    if (kind == "not_one_mod_4")
        return NotOneMod4{};
    if (kind == "composite_abs_d")
        return CompositeAbsD{j.at("factor").get<Int>()};
    throw DomainError("unknown evidence kind '" + kind + "'");
}

H1Certificate certificate_from_json(Json const & j)
{
    H1Certificate c;
    c.D = j.at("D").get<Int>();
    c.verdict = j.at("verdict").get<bool>();
    c.route = j.value("route", "");
    c.evidence = evidence_from_json(j.at("evidence"));
    if (j.contains("cross_check") && !j.at("cross_check").is_null())
        c.cross_check = evidence_from_json(j.at("cross_check"));
    return c;
}

} // namespace qfi
