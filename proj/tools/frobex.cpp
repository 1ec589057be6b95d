#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobex/acceptance.hpp"
#include "frobex/io.hpp"

namespace fs = std::filesystem;
using namespace frobex;

namespace {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_error = 2 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string family;
    std::string group;
    std::string lattice;
    std::string kind = "tensor";
    std::string out_dir;
    std::optional<unsigned> conductor;
    std::vector<std::size_t> dims{1, 2, 3};
    std::string format = "json";
    std::uint64_t seed = 1;
};

/// Output envelope shared by every command.
Json envelope(const RunConfig& cfg)
{
    Json j = Json::object();
    j["command"] = cfg.command;
    j["seed"] = cfg.seed;
    return j;
}

void print_report_table(std::ostream& out, const Report& r)
{
    for (const auto& it : r.items()) {
        out << (it.passed ? "PASS  " : "FAIL  ") << it.name;
        if (!it.detail.empty())
            out << "  (" << it.detail << ")";
        out << "\n";
    }
}

std::string vec_text(const Vec& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

void print_classification_table(std::ostream& out, const Classification& c)
{
    out << "structures: " << c.structures.size() << "\n";
    for (std::size_t i = 0; i < c.structures.size(); ++i) {
        const auto& s = c.structures[i];
        out << "  [" << i << "] phi columns:";
        for (std::size_t k = 0; k < s.ext.phi.cols(); ++k)
            out << " " << vec_text(s.ext.phi.column_vec(k));
        out << "\n      theta " << vec_text(s.ext.theta);
        for (const auto& d : s.directions)
            out << " + t " << vec_text(d);
        out << "\n";
    }
    out << "classes: " << c.classes.size() << "\n";
    for (const auto& cl : c.classes) {
        out << "  {";
        for (std::size_t k = 0; k < cl.size(); ++k)
            out << (k ? ", " : "") << cl[k];
        out << "}\n";
    }
    out << "unresolved pairs: " << c.unresolved.size() << "\n";
    for (const auto& [a, b] : c.unresolved)
        out << "  (" << a << ", " << b << ")\n";
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& j, const std::function<void()>& table)
{
    if (cfg.format == "json") {
        out << dump_json(j);
        return;
    }
    out << "command: " << cfg.command << "\nseed: " << cfg.seed << "\n";
    table();
}

CandidateLattice lattice_from_json(const Json& j)
{
    const CycField f = detail::field_of(j);
    const Json& values = detail::array_at(detail::member(j, "values", ""), "/values");
    std::vector<CycScalar> v;
    for (std::size_t i = 0; i < values.size(); ++i)
        v.push_back(detail::scalar_at(f, values[i], "/values/" + std::to_string(i)));
    const std::string description = j.contains("description") && j["description"].is_string()
                                        ? j["description"].get<std::string>()
                                        : std::string("lattice file");
    return CandidateLattice::make(f, std::move(v), description);
}

/// "units" is {0, +-1}; a family name gives that family's lattice; anything else is read as a file.
CandidateLattice resolve_lattice(const std::string& spec, CycField f)
{
    if (spec.empty() || spec == "units")
        return CandidateLattice::symmetric(f, {CycScalar(f, 1L)}, "{0,+-1}");
    const auto names = catalog_family_names();
    if (std::find(names.begin(), names.end(), spec) != names.end())
        return catalog_family(spec, f.conductor()).lattice;
    if (!fs::exists(spec))
        throw PreconditionError("unknown lattice '" + spec + "': not a lattice name or an existing file");
    CandidateLattice l = lattice_from_json(load_json_file(spec));
    if (l.field != f)
        throw FieldMismatch("lattice field Q(zeta_" + std::to_string(l.field.conductor()) +
                            ") differs from the algebra field Q(zeta_" + std::to_string(f.conductor()) + ")");
    return l;
}

GroupTable group_by_name(const std::string& name)
{
    if (name == "klein")
        return klein_four_group();
    if (name == "S3")
        return symmetric_group_3();
    if (name.size() > 1 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        const std::size_t n = std::stoul(name.substr(1));
        if (n >= 1 && n <= 12)
            return cyclic_group(n);
    }
    throw PreconditionError("unknown group '" + name + "' (use C1..C12, klein or S3)");
}

const std::string& single_input(const RunConfig& cfg)
{
    if (cfg.inputs.size() != 1)
        throw PreconditionError(cfg.command + " expects exactly one input file");
    return cfg.inputs.front();
}

void reject_conductor(const RunConfig& cfg)
{
    if (cfg.conductor)
        throw PreconditionError("--field-conductor applies to catalog families and groups, not to input files");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    reject_conductor(cfg);
    const std::string& path = single_input(cfg);
    const Json doc = load_json_file(path);
    Report rep;
    std::string kind;
    switch (document_kind(doc)) {
    case DocumentKind::frobenius: {
        kind = "frobenius";
        rep = check_frobenius(frob_from_json(doc));
        break;
    }
    case DocumentKind::extended: {
        kind = "extended";
        const ExtFrobAlgebra e = ext_from_json(doc);
        rep.merge(check_frobenius(e.frob), "frobenius.");
        rep.merge(check_extended(e), "extended.");
        if (rep.passed())
            rep.add("key_identity", check_key_identity(e));
        break;
    }
    case DocumentKind::hopf: {
        kind = "hopf";
        const HopfAlgebra h = hopf_from_json(doc);
        rep = check_hopf(h);
        if (rep.passed()) {
            rep.merge(check_lemma_A1(h), "antipode_lemma.");
            rep.merge(check_frobenius(psi(h)), "psi.");
        }
        break;
    }
    }
    Json j = envelope(cfg);
    j["input"] = path;
    j["kind"] = kind;
    j["passed"] = rep.passed();
    j["report"] = to_json(rep);
    emit(out, cfg, j, [&] {
        out << "input: " << path << "\nkind: " << kind << "\n";
        print_report_table(out, rep);
        out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    });
    return rep.passed() ? exit_pass : exit_fail;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out)
{
    Json j = envelope(cfg);
    Classification c;
    if (!cfg.family.empty()) {
        if (!cfg.inputs.empty())
            throw PreconditionError("classify takes either --family or an input file");
        const Family fam = catalog_family(cfg.family, cfg.conductor);
        const CandidateLattice lattice = cfg.lattice.empty() ? fam.lattice : resolve_lattice(cfg.lattice, fam.algebra.field());
        ClassifyOptions opts;
        opts.witness_lattice = cfg.lattice.empty() ? fam.witness_lattice : std::nullopt;
        c = classify_extended(fam.algebra, lattice, fam.witnesses, opts);
        j["family"] = fam.name;
        j["lattice"] = to_json(lattice);
    } else {
        reject_conductor(cfg);
        const std::string& path = single_input(cfg);
        const FrobAlgebra fa = frob_from_json(load_json_file(path));
        const CandidateLattice lattice = resolve_lattice(cfg.lattice, fa.field());
        c = classify_extended(fa, lattice);
        j["input"] = path;
        j["lattice"] = to_json(lattice);
    }
    const bool ok = c.unresolved.empty();
    j["passed"] = ok;
    j["classification"] = to_json(c);
    emit(out, cfg, j, [&] {
        out << "lattice: " << j["lattice"]["description"].get<std::string>() << "\n";
        print_classification_table(out, c);
        out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    });
    return ok ? exit_pass : exit_fail;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out)
{
    Json j = envelope(cfg);
    if (cfg.inputs.empty()) {
        Json list = Json::array();
        for (const auto& name : catalog_family_names()) {
            const Family fam = catalog_family(name, cfg.conductor);
            Json x = Json::object();
            x["name"] = name;
            x["title"] = fam.title;
            x["dim"] = fam.algebra.dim();
            x["conductor"] = fam.algebra.field().conductor();
            x["claimed"] = fam.claimed.size();
            list.push_back(std::move(x));
        }
        j["families"] = list;
        emit(out, cfg, j, [&] {
            for (const auto& x : list)
                out << x["name"].get<std::string>() << "  dim " << x["dim"].get<std::size_t>() << "  "
                    << x["title"].get<std::string>() << "\n";
        });
        return exit_pass;
    }
    const Family fam = catalog_family(single_input(cfg), cfg.conductor);
    j["family"] = to_json(fam);
    emit(out, cfg, j, [&] {
        out << fam.name << ": " << fam.title << "\nlattice: " << fam.lattice.description << "\nlisted structures: "
            << fam.claimed.size() << "\n";
        for (const auto& c : fam.claimed)
            out << "  " << c.label << "\n";
    });
    return exit_pass;
}

int cmd_functor_check(const RunConfig& cfg, std::ostream& out)
{
    reject_conductor(cfg);
    const std::string& path = single_input(cfg);
    const ExtFrobAlgebra b = ext_from_json(load_json_file(path));
    FunctorKind kind;
    if (cfg.kind == "tensor")
        kind = FunctorKind::tensor;
    else if (cfg.kind == "biproduct")
        kind = FunctorKind::biproduct;
    else
        throw PreconditionError("unknown functor kind '" + cfg.kind + "' (use tensor or biproduct)");
    const RealizedFunctor F = kind == FunctorKind::tensor ? tensor_with(b) : biproduct_with(b);
    const ObjectSample sample = make_sample(b.field(), cfg.dims, 5, cfg.seed);
    Report rep;
    rep.merge(check_extended(b), "B.");
    rep.merge(check_frobenius_functor(F, sample), "frobenius.");
    if (rep.passed())
        rep.merge(check_extended_functor(F, sample), "extended.");
    const bool separable = check_separable_functor(F, sample);
    Json j = envelope(cfg);
    j["input"] = path;
    j["functor"] = F.name();
    j["dims"] = cfg.dims;
    j["morphisms"] = sample.morphisms.size();
    j["separable"] = separable;
    j["passed"] = rep.passed();
    j["report"] = to_json(rep);
    emit(out, cfg, j, [&] {
        out << "functor: " << F.name() << "\nmorphisms: " << sample.morphisms.size() << "\n";
        print_report_table(out, rep);
        out << "separable: " << (separable ? "yes" : "no") << "\nresult: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    });
    return rep.passed() ? exit_pass : exit_fail;
}

int cmd_hopf_check(const RunConfig& cfg, std::ostream& out)
{
    HopfAlgebra h;
    Json j = envelope(cfg);
    if (!cfg.group.empty()) {
        if (!cfg.inputs.empty())
            throw PreconditionError("hopf-check takes either --group or an input file");
        const GroupTable g = group_by_name(cfg.group);
        h = group_hopf(g, field_make(cfg.conductor.value_or(1)));
        j["group"] = g.name;
    } else {
        reject_conductor(cfg);
        j["input"] = single_input(cfg);
        h = hopf_from_json(load_json_file(single_input(cfg)));
    }
    Report rep = check_hopf(h);
    if (rep.passed()) {
        rep.merge(check_lemma_A1(h), "antipode_lemma.");
        const FrobAlgebra p = psi(h);
        rep.merge(check_frobenius(p), "psi.");
        j["psi"] = to_json(p);
    }
    j["passed"] = rep.passed();
    j["report"] = to_json(rep);
    emit(out, cfg, j, [&] {
        print_report_table(out, rep);
        out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    });
    return rep.passed() ? exit_pass : exit_fail;
}

int cmd_acceptance(const RunConfig& cfg, std::ostream& out)
{
    std::ostringstream lines;
    const AcceptanceRun run = run_acceptance(&lines);
    Json j = envelope(cfg);
    Json items = Json::array();
    for (const auto& r : run.results) {
        Json x = Json::object();
        x["criterion"] = r.number;
        x["title"] = r.title;
        x["status"] = r.status == CriterionStatus::pass ? "pass" : r.status == CriterionStatus::fail ? "fail" : "evidence";
        x["detail"] = r.detail;
        x["millis"] = r.millis;
        x["bound_millis"] = r.bound_millis;
        items.push_back(std::move(x));
    }
    j["passed"] = run.passed();
    j["criteria"] = std::move(items);
    emit(out, cfg, j, [&] {
        out << lines.str() << "result: " << (run.passed() ? "PASS" : "FAIL") << "\n";
    });
    return run.passed() ? exit_pass : exit_fail;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// One golden file: its path under the output directory and the command producing it.
struct GoldenCase {
    std::string file;
    std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases()
{
    std::vector<GoldenCase> cases;
    for (const auto& name : catalog_family_names()) {
        cases.push_back({"catalog/" + name + ".json", {"catalog", name}});
        cases.push_back({"classify/" + name + ".json", {"classify", "--family", name}});
    }
    cases.push_back({"catalog/index.json", {"catalog"}});
    cases.push_back({"classify/kC2.txt", {"classify", "--family", "kC2", "--format", "table"}});
    cases.push_back({"classify/nil3_units.json", {"classify", "inputs/nil3.json", "--lattice", "units"}});
    for (const char* g : {"C2", "C3", "C4", "klein", "C5", "C6", "S3"})
        cases.push_back({"hopf/" + std::string(g) + ".json", {"hopf-check", "--group", g}});
    cases.push_back({"hopf/C3_file.json", {"hopf-check", "inputs/hopf_C3.json"}});
    for (const char* in : {"kC2_sqrt2", "kC2_negation", "T2", "nil3", "hopf_C3", "bad_algebra"})
        cases.push_back({"verify/" + std::string(in) + ".json", {"verify", "inputs/" + std::string(in) + ".json"}});
    cases.push_back({"verify/kC2_sqrt2.txt", {"verify", "inputs/kC2_sqrt2.json", "--format", "table"}});
    cases.push_back({"functor/tensor_kC2_sqrt2.json", {"functor-check", "inputs/kC2_sqrt2.json", "--dims", "1,2", "--seed", "7"}});
    cases.push_back({"functor/biproduct_kC2_negation.json",
                     {"functor-check", "inputs/kC2_negation.json", "--kind", "biproduct", "--dims", "1,2"}});
    return cases;
}

/// Input documents shipped next to the goldens.
std::vector<std::pair<std::string, Json>> golden_inputs()
{
    const CycField f8 = field_make(8);
    Json bad = to_json(detail::c2_sqrt2(f8));
    bad["m"][0][3] = "0";
    return {{"inputs/kC2_sqrt2.json", to_json(detail::c2_sqrt2(f8))},
            {"inputs/kC2_negation.json", to_json(detail::c2_negation(f8))},
            {"inputs/T2.json", to_json(taft_algebra(2, 1, field_make(2)))},
            {"inputs/nil3.json", to_json(nilpotent_algebra(3, field_make(1)))},
            {"inputs/hopf_C3.json", to_json(group_hopf(cyclic_group(3), field_make(1)))},
            {"inputs/bad_algebra.json", bad}};
}

void write_file(const fs::path& p, const std::string& text)
{
    fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw Error("cannot write " + p.string());
    f << text;
}

int cmd_goldens(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.out_dir.empty())
        throw PreconditionError("goldens requires --out <dir>");
    const fs::path root(cfg.out_dir);
    for (const auto& [file, doc] : golden_inputs())
        write_file(root / file, dump_json(doc));
    Json manifest = Json::array();
    const fs::path cwd = fs::current_path();
    fs::current_path(root);
    for (const auto& c : golden_cases()) {
        std::ostringstream text, errors;
        const int code = run(c.args, text, errors);
        if (code == exit_error) {
            fs::current_path(cwd);
            err << "golden " << c.file << " failed: " << errors.str();
            return exit_error;
        }
        write_file(c.file, text.str());
        Json x = Json::object();
        x["file"] = c.file;
        x["args"] = c.args;
        x["exit"] = code;
        manifest.push_back(std::move(x));
    }
    fs::current_path(cwd);
    write_file(root / "manifest.json", dump_json(manifest));
    out << "wrote " << manifest.size() << " goldens to " << cfg.out_dir << "\n";
    return exit_pass;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    if (args.size() >= 2 && args[0] == "functor" && args[1] == "check") {
        args.erase(args.begin());
        args[0] = "functor-check";
    }
    RunConfig cfg;
    CLI::App app{"Exact checks and classification of extended Frobenius algebras", "frobex"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field-conductor", cfg.conductor, "Conductor N of Q(zeta_N) for catalog families and groups")
            ->check(CLI::Range(1u, 120u));
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--seed", cfg.seed, "Seed for sampled morphisms, printed in every report");
    };
    CLI::App* verify = app.add_subcommand("verify", "Check the axioms of an algebra document");
    verify->add_option("input", cfg.inputs, "JSON document")->required();
    CLI::App* classify = app.add_subcommand("classify", "Enumerate and group extended structures");
    classify->add_option("input", cfg.inputs, "JSON Frobenius algebra document");
    classify->add_option("--family", cfg.family, "Catalog family name");
    classify->add_option("--lattice", cfg.lattice, "Lattice name (units or a family name) or lattice file");
    CLI::App* catalog = app.add_subcommand("catalog", "List catalog families or print one");
    catalog->add_option("family", cfg.inputs, "Family name");
    CLI::App* functor = app.add_subcommand("functor-check", "Check TensorWith or BiproductWith an extended algebra");
    functor->add_option("input", cfg.inputs, "JSON extended algebra document")->required();
    functor->add_option("--kind", cfg.kind, "tensor or biproduct");
    functor->add_option("--dims", cfg.dims, "Sample object dimensions")->delimiter(',');
    CLI::App* hopf = app.add_subcommand("hopf-check", "Check a Hopf algebra and its Frobenius image");
    hopf->add_option("input", cfg.inputs, "JSON Hopf algebra document");
    hopf->add_option("--group", cfg.group, "Group name: C1..C12, klein, S3");
    CLI::App* acceptance = app.add_subcommand("acceptance", "Run the acceptance suite");
    CLI::App* goldens = app.add_subcommand("goldens", "Regenerate golden files");
    goldens->add_option("--out", cfg.out_dir, "Output directory")->required();
    for (CLI::App* sub : {verify, classify, catalog, functor, hopf, acceptance, goldens})
        add_common(sub);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "verify")
            return cmd_verify(cfg, out);
        if (cfg.command == "classify")
            return cmd_classify(cfg, out);
        if (cfg.command == "catalog")
            return cmd_catalog(cfg, out);
        if (cfg.command == "functor-check")
            return cmd_functor_check(cfg, out);
        if (cfg.command == "hopf-check")
            return cmd_hopf_check(cfg, out);
        if (cfg.command == "acceptance")
            return cmd_acceptance(cfg, out);
        return cmd_goldens(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace

int main(int argc, char** argv)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
