#include "qfi/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qfi/class_number.hpp"
#include "qfi/principality.hpp"
#include "qfi/serialize.hpp"
#include "qfi/version.hpp"

namespace qfi::cli {

namespace {

enum class Format { text, json };

struct Common
{
    std::string format = "text";
    Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

void add_format(CLI::App * cmd, Common & common)
{
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void emit(std::ostream & out, std::string const & command, Json inputs, Json result)
{
    Json envelope;
    envelope["command"] = command;
    envelope["inputs"] = std::move(inputs);
    envelope["result"] = std::move(result);
    envelope["version"] = qfi::version;
    out << envelope.dump(2) << "\n";
}

std::string verdict_word(bool principal)
{
    return principal ? "principal" : "not principal";
}

int cmd_split(Int D, Int q, Common const & common, std::ostream & out)
{
    QuadraticField const field(D);
    SplittingType const type = split_type(field, q);
    Json result;
    result["field"] = to_json(field);
    result["q"] = q;
    result["splitting"] = to_json(type);
    std::optional<SplitPrimeIdeal> P;
    if (auto const * s = std::get_if<Split>(&type)) {
        P.emplace(field, q, s->n);
        result["ideal"] = to_json(*P);
        result["form"] = to_json(associated_form(*P));
    }
    if (common.fmt() == Format::json) {
        emit(out, "split", {{"d", D}, {"q", q}}, std::move(result));
        return exit_ok;
    }
    out << "D = " << D << ", q = " << q << ": ";
    if (P) {
        out << "split\n";
        out << "n = " << P->n() << ", l = " << P->l() << "\n";
        out << "ideal: " << P->to_string() << "\n";
        out << "form: " << associated_form(*P).to_string() << "\n";
    } else if (std::holds_alternative<Inert>(type)) {
        out << "inert\n";
    } else {
        out << "ramified\n";
    }
    return exit_ok;
}

int cmd_principal(Int D, Int q, bool derivation, Common const & common, std::ostream & out)
{
    QuadraticField const field(D);
    SplitPrimeIdeal const P = SplitPrimeIdeal::canonical(field, q);
    BinaryForm const f = associated_form(P);
    PrincipalityResult const r = is_principal(P);
    int const delta = field.delta();
    std::optional<Derivation> deriv;
    if (derivation && r.verdict)
        deriv = derive_intermediates(P, *r.representation, *r.sign, *r.audit);

    if (common.fmt() == Format::json) {
        Json result;
        result["field"] = to_json(field);
        result["ideal"] = to_json(P);
        result["form"] = to_json(f);
        result["targets"] = field.imaginary() ? Json::array({delta * delta})
                                              : Json::array({delta * delta, -delta * delta});
        result["principality"] = to_json(r);
        if (r.generator)
            result["verified"] = verify_generator(P, *r.generator);
        if (derivation)
            result["derivation"] = deriv ? to_json(*deriv) : Json(nullptr);
        emit(out, "principal", {{"d", D}, {"q", q}, {"emit_derivation", derivation}}, std::move(result));
        return exit_ok;
    }

    out << "ideal " << P.to_string() << " in Q(√" << D << "), delta = " << delta << "\n";
    out << "form f = " << f.to_string() << "\n";
    out << "verdict: " << verdict_word(r.verdict) << "\n";
    if (!r.verdict) {
        out << "reason: f does not represent " << delta * delta;
        if (!field.imaginary())
            out << " or " << -delta * delta;
        out << " (exhaustive " << decision_method(f) << ")\n";
        return exit_ok;
    }
    auto const & rep = *r.representation;
    auto const & audit = *r.audit;
    out << "representation: f(" << rep.x << ", " << rep.y << ") = " << rep.value << "\n";
    out << "audit: c = " << audit.c << ", d = " << audit.d << ", a = " << audit.a << ", b = " << audit.b << "\n";
    out << "generator: " << r.generator->to_string() << "\n";
    out << "norm: " << r.generator->norm() << " (|N| = q and generator in ideal: "
        << (verify_generator(P, *r.generator) ? "verified" : "FAILED") << ")\n";
    if (deriv) {
        out << "w = " << deriv->w << "\n";
        out << "z = " << deriv->z << "\n";
        out << "r = " << deriv->r << "\n";
        out << "s = " << deriv->s << "\n";
    }
    return exit_ok;
}

int cmd_represents(std::string const & form_text, Int target, bool all_signs, Common const & common,
                   std::ostream & out)
{
    BinaryForm const f = BinaryForm::parse(form_text);
    Int const d = f.determinant();
    if (f.a == 0)
        throw DomainError("degenerate form with a = 0");
    if (d >= 0 && is_square(d))
        throw DomainError("form determinant " + std::to_string(d) + " is a perfect square");
    if (target == 0)
        throw DomainError("target must be nonzero");
    std::vector<Int> targets{target};
    if (all_signs)
        targets.push_back(-target);
    auto const rep = represents(f, targets);
    std::string const method = decision_method(f);

    if (common.fmt() == Format::json) {
        Json result;
        result["form"] = to_json(f);
        result["targets"] = targets;
        result["method"] = method;
        result["representation"] = rep ? to_json(*rep) : Json(nullptr);
        if (d > 0) {
            result["pell"] = to_json(pell_fundamental(d));
        }
        emit(out, "represents", {{"form", form_text}, {"target", target}, {"all_signs", all_signs}},
             std::move(result));
        return exit_ok;
    }
    out << "form: " << f.to_string() << "\n";
    out << "method: " << method << "\n";
    if (rep)
        out << "representation: f(" << rep->x << ", " << rep->y << ") = " << rep->value << "\n";
    else
        out << "representation: none\n";
    return exit_ok;
}

void print_evidence(std::ostream & out, Evidence const & e, bool full)
{
    std::visit(
        [&](auto const & v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RabinowitschTable>) {
                out << "  rabinowitsch table: " << v.rows.size() << " rows, all prime\n";
                if (full)
                    for (auto const & row : v.rows)
                        out << "    x = " << row.x << "  F(x) = " << row.value << "  prime\n";
            } else if constexpr (std::is_same_v<T, RabinowitschComposite>) {
                out << "  composite value: F(" << v.x << ") = " << v.value << " = " << v.factor << " * "
                    << v.value / v.factor << "\n";
            } else if constexpr (std::is_same_v<T, NonPrincipalIdeal>) {
                out << "  non-principal ideal: (" << v.q << ", " << v.n << "+√D), form " << v.form.to_string()
                    << "\n";
                out << "    " << v.route << "\n";
            } else if constexpr (std::is_same_v<T, SpecialDiscriminant>) {
                out << "  special discriminant " << v.discriminant << "\n";
            } else if constexpr (std::is_same_v<T, NotOneMod4>) {
                out << "  discriminant not 1 mod 4\n";
            } else if constexpr (std::is_same_v<T, CompositeAbsD>) {
                out << "  |D| composite, divisible by " << v.factor << "\n";
            }
        },
        e);
}

int cmd_h1(std::string const & command, Int D, Common const & common, std::ostream & out)
{
    H1Certificate const cert = classify_h1(D);
    bool const valid = validate_certificate(cert);
    if (!valid)
        throw InvariantViolation("certificate failed self-validation");
    if (common.fmt() == Format::json) {
        Json result = to_json(cert);
        result["validated"] = valid;
        emit(out, command, {{"d", D}}, std::move(result));
        return exit_ok;
    }
    out << "Q(√" << D << "): class number " << (cert.verdict ? "1" : "greater than 1") << "\n";
    out << "route: " << cert.route << "\n";
    out << "evidence:\n";
    print_evidence(out, cert.evidence, true);
    if (cert.cross_check) {
        out << "cross-check:\n";
        print_evidence(out, *cert.cross_check, true);
    }
    out << "validated: " << (valid ? "yes" : "no") << "\n";
    return exit_ok;
}

int cmd_scan(Int min_abs, Int max_abs, unsigned jobs, bool verbose, Common const & common, std::ostream & out)
{
    auto const certs = scan_h1(min_abs, max_abs, jobs);
    std::vector<Int> ones;
    std::size_t validated = 0;
    for (auto const & c : certs) {
        if (c.verdict)
            ones.push_back(c.D);
        if (validate_certificate(c))
            ++validated;
    }
    if (validated != certs.size())
        throw InvariantViolation("some scan certificates failed self-validation");
    if (common.fmt() == Format::json) {
        Json result;
        result["fields"] = certs.size();
        result["validated"] = validated;
        result["class_number_one"] = ones;
        Json list = Json::array();
        for (auto const & c : certs)
            list.push_back(to_json(c));
        result["certificates"] = std::move(list);
        // jobs only changes scheduling, so it is not echoed: output is identical for any job count
        emit(out, "scan", {{"min", min_abs}, {"max", max_abs}}, std::move(result));
        return exit_ok;
    }
    if (verbose)
        for (auto const & c : certs)
            out << c.D << ": " << (c.verdict ? "h = 1" : "h > 1") << " [" << evidence_kind(c.evidence) << "] "
                << c.route << "\n";
    out << "scanned " << certs.size() << " squarefree D with " << min_abs << " <= |D| <= " << max_abs
        << ", all certificates validated\n";
    out << "class number 1:";
    for (Int D : ones)
        out << " " << D;
    out << "\n";
    return exit_ok;
}

unsigned default_jobs()
{
    if (char const * env = std::getenv("QFI_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (std::exception const &) {
        }
    }
    return 1;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Principality of split prime ideals in quadratic fields", "qfi"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qfi::version));
    Common common;

    Int D = 0, q = 0, target = 0, min_abs = 1, max_abs = 1;
    bool emit_derivation = false, all_signs = false, verbose = false;
    std::string form;
    unsigned jobs = default_jobs();

    auto * split = app.add_subcommand("split", "Classify how an odd prime factors in Q(sqrt D)");
    split->add_option("--d", D, "Squarefree D")->required();
    split->add_option("--q", q, "Odd prime q")->required();
    add_format(split, common);

    auto * principal = app.add_subcommand("principal", "Decide principality of (q, n + sqrt D) and build a generator");
    principal->add_option("--d", D, "Squarefree D")->required();
    principal->add_option("--q", q, "Odd prime q that splits")->required();
    principal->add_flag("--emit-derivation", emit_derivation, "Print the substitution intermediates w, z, r, s");
    add_format(principal, common);

    auto * reps = app.add_subcommand("represents", "Decide whether a binary form represents a target");
    reps->add_option("--form", form, "Coefficients a,2b,c")->required();
    reps->add_option("--target", target, "Nonzero target")->required();
    reps->add_flag("--all-signs", all_signs, "Also try the negated target");
    add_format(reps, common);

    auto * h1 = app.add_subcommand("h1", "Class number one decision for an imaginary field");
    h1->add_option("--d", D, "Squarefree D < 0")->required();
    add_format(h1, common);

    auto * certificate = app.add_subcommand("certificate", "Alias of h1 with full evidence");
    certificate->add_option("--d", D, "Squarefree D < 0")->required();
    add_format(certificate, common);

    auto * scan = app.add_subcommand("scan", "Class number one decision for a range of |D|");
    scan->add_option("--min", min_abs, "Smallest |D|")->required();
    scan->add_option("--max", max_abs, "Largest |D|")->required();
    scan->add_option("--jobs", jobs, "Worker threads (default $QFI_JOBS or 1)")->check(CLI::PositiveNumber);
    scan->add_flag("--verbose", verbose, "One line per field");
    add_format(scan, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (split->parsed())
            return cmd_split(D, q, common, out);
        if (principal->parsed())
            return cmd_principal(D, q, emit_derivation, common, out);
        if (reps->parsed())
            return cmd_represents(form, target, all_signs, common, out);
        if (h1->parsed())
            return cmd_h1("h1", D, common, out);
        if (certificate->parsed())
            return cmd_h1("certificate", D, common, out);
        if (scan->parsed())
            return cmd_scan(min_abs, max_abs, jobs, verbose, common, out);
    } catch (DomainError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (OverflowError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_usage;
}

} // namespace qfi::cli
