#include "logcentre/case_studies.hpp"
#include "logcentre/error.hpp"
#include "logcentre/input.hpp"
#include "logcentre/ncpoly.hpp"
#include "logcentre/orders.hpp"
#include "logcentre/quotient.hpp"
#include "logcentre/toric.hpp"
#include "logcentre/valmat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace {

using namespace logcentre;
using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_negative = 3;
constexpr int exit_resource = 4;

struct Outcome {
    std::string text;
    ordered_json json;
    int status = exit_ok;
};

struct GlobalOptions {
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
};

int status_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::not_applicable:
    case ErrorKind::non_standard_boundary:
        return exit_negative;
    case ErrorKind::resource_limit:
    case ErrorKind::nontermination_suspected:
    case ErrorKind::representation_overflow:
        return exit_resource;
    default:
        return exit_usage;
    }
}

std::uint64_t step_cap_from_env()
{
    char const* env = std::getenv("LOGCENTRE_STEP_CAP");
    if (!env)
        return ncpoly::default_step_cap;
    try {
        std::size_t used = 0;
        auto cap = std::stoull(env, &used);
        if (used == std::string(env).size() && cap > 0)
            return cap;
    } catch (std::exception const&) {
    }
    fail(ErrorKind::parse_error, "LOGCENTRE_STEP_CAP must be a positive integer");
}

/* FILE#name -> (file, name) */
std::pair<std::string, std::string> split_target(std::string const& target)
{
    auto hash = target.rfind('#');
    if (hash == std::string::npos)
        return {target, ""};
    return {target.substr(0, hash), target.substr(hash + 1)};
}

io::InputDocument load(std::string const& file)
{
    return io::load_document(file);
}

std::string join(std::vector<std::string> const& parts, char const* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

ordered_json rational_json(RationalVector const& v)
{
    ordered_json out = ordered_json::array();
    for (auto const& x : v)
        out.push_back(to_string(x));
    return out;
}

// order

Outcome order_omega_center(std::int64_t e, std::int64_t i)
{
    auto v = valmat::centralizer(valmat::omega_power(e, i));
    Outcome o;
    o.text = v.str() + "\n";
    o.json = {{"command", "order omega-center"}, {"e", e}, {"i", i}, {"centralizer_exponent", v.value()}};
    return o;
}

Outcome order_discriminant(std::string const& target)
{
    auto [file, name] = split_target(target);
    auto doc = load(file);
    auto const& spec = io::get_object<orders::OrderSpec>(doc, name, "order");
    auto d = orders::discriminant(spec);
    Outcome o;
    o.text = d.str() + "\n";
    ordered_json terms = ordered_json::array();
    for (auto const& [p, c] : d.terms())
        terms.push_back({{"prime", p}, {"coeff", to_string(c)}});
    o.json = {{"command", "order discriminant"}, {"order", spec.name}, {"divisor", terms}};
    return o;
}

Outcome order_cover_center(std::int64_t e, std::int64_t m)
{
    auto v = orders::cover_graded_valuations(e, m);
    std::vector<std::string> parts;
    for (auto x : v)
        parts.push_back(std::to_string(x));
    Outcome o;
    o.text = join(parts, " ") + "\n";
    o.json = {{"command", "order cover-center"}, {"e", e}, {"m", m}, {"valuations", v}};
    return o;
}

// toric

toric::ToricDivisor divisor_from_flag(std::string const& flag, io::ConePairRecord const& rec)
{
    if (flag == "K")
        return toric::canonical_divisor(rec.pair.cone);
    if (flag == "K+D")
        return toric::log_canonical_divisor(rec.pair);
    toric::ToricDivisor d;
    std::size_t start = 0;
    while (start <= flag.size()) {
        auto comma = flag.find(',', start);
        auto piece = flag.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        d.coeffs.push_back(parse_rational(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (d.coeffs.size() != rec.pair.cone.rays().size())
        fail(ErrorKind::parse_error, "--divisor needs one coefficient per ray");
    return d;
}

Outcome toric_command(std::string const& sub, std::string const& target, std::string const& divisor_flag,
                      toric::EnumerationOptions const& options)
{
    auto [file, name] = split_target(target);
    auto doc = load(file);
    auto const& rec = io::get_object<io::ConePairRecord>(doc, name, "cone_pair");
    auto const& cone = rec.pair.cone;
    Outcome o;
    o.json["command"] = "toric " + sub;

    if (sub == "qcartier") {
        auto u = toric::q_cartier_functional(rec.pair, divisor_from_flag(divisor_flag, rec));
        o.text = (u ? "u=" + format_vector(u->u) : std::string("none")) + "\n";
        o.json["divisor"] = divisor_flag;
        o.json["functional"] = u ? rational_json(u->u) : ordered_json(nullptr);
        o.status = u ? exit_ok : exit_negative;
    } else if (sub == "index") {
        auto u = toric::q_cartier_functional(rec.pair, toric::log_canonical_divisor(rec.pair));
        if (!u) {
            o.text = "none\n";
            o.json["index"] = nullptr;
            o.status = exit_negative;
        } else {
            auto m = toric::cartier_index(*u, cone.lattice());
            o.text = std::to_string(m) + "\n";
            o.json["index"] = m;
        }
    } else if (sub == "klt") {
        auto r = toric::klt_check(rec.pair);
        if (!r.functional) {
            o.text = "klt=false u=none\n";
            o.json["klt"] = false;
            o.json["functional"] = nullptr;
            o.status = exit_negative;
        } else {
            auto m = toric::cartier_index(*r.functional, cone.lattice());
            o.text = std::string("klt=") + (r.klt ? "true" : "false") + " u=" + format_vector(r.functional->u)
                     + " index=" + std::to_string(m) + "\n";
            o.json["klt"] = r.klt;
            o.json["functional"] = rational_json(r.functional->u);
            o.json["index"] = m;
        }
    } else if (sub == "canonical") {
        bool c = toric::canonical_check(cone, options);
        o.text = std::string("canonical=") + (c ? "true" : "false") + "\n";
        o.json["canonical"] = c;
    } else if (sub == "cover") {
        auto cover = toric::log_canonical_cover(rec.pair);
        std::vector<std::string> basis, rays, ram;
        ordered_json jbasis = ordered_json::array(), jrays = ordered_json::array();
        for (std::size_t c = 0; c < cone.dim(); ++c) {
            basis.push_back(format_vector(cover.cover_lattice.basis().column(c)));
            jbasis.push_back(rational_json(cover.cover_lattice.basis().column(c)));
        }
        for (auto const& r : cover.cover_cone.rays()) {
            rays.push_back(format_vector(r));
            jrays.push_back(r);
        }
        for (auto r : cover.ramification)
            ram.push_back(std::to_string(r));
        o.text = "degree=" + std::to_string(cover.degree) + "\nlattice_basis=" + join(basis, " ")
                 + "\nrays=" + join(rays, " ") + "\nramification=" + join(ram, " ") + "\n";
        o.json["degree"] = cover.degree;
        o.json["lattice_basis"] = jbasis;
        o.json["rays"] = jrays;
        o.json["ramification"] = cover.ramification;
    } else if (sub == "dual-gens" || sub == "hilbert") {
        bool dual = sub == "dual-gens";
        auto gens = dual ? toric::dual_cone_generators(cone, options) : toric::hilbert_basis(cone, options);
        auto lattice = dual ? cone.lattice().dual() : cone.lattice();
        o.text = "count=" + std::to_string(gens.size()) + "\n";
        ordered_json list = ordered_json::array();
        for (auto const& g : gens) {
            if (dual) {
                auto mono = cases::monomial_name(lattice.to_ambient(g));
                o.text += format_vector(g) + " " + mono + "\n";
                list.push_back({{"coords", g}, {"monomial", mono}});
            } else {
                o.text += format_vector(g) + "\n";
                list.push_back(g);
            }
        }
        o.json["generators"] = list;
    } else {
        fail(ErrorKind::parse_error, "unknown toric subcommand '" + sub + "'");
    }
    return o;
}

// ncpoly

ncpoly::RewriteSystem resolve_presentation(std::string const& target)
{
    ncpoly::RewriteSystem rs = [&] {
        if (target == "clifford" && !std::filesystem::exists(target))
            return ncpoly::clifford_system();
        auto [file, name] = split_target(target);
        auto doc = load(file);
        return io::get_object<ncpoly::RewriteSystem>(doc, name, "presentation");
    }();
    if (std::getenv("LOGCENTRE_STEP_CAP"))
        rs.set_step_cap(step_cap_from_env());
    return rs;
}

Outcome ncpoly_command(std::string const& sub, std::string const& target, std::string const& expr,
                       std::string const& lhs, std::string const& rhs)
{
    Outcome o;
    o.json["command"] = "ncpoly " + sub;
    if (sub == "quotient-check") {
        auto rep = quotient::commutative_quotient_check(target);
        ordered_json checks = ordered_json::array();
        for (auto const& c : rep.checks) {
            o.text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.id + ": " + c.description + "\n";
            checks.push_back({{"id", c.id}, {"description", c.description}, {"pass", c.pass}});
        }
        o.text += std::string("overall: ") + (rep.overall ? "PASS" : "FAIL") + "\n";
        o.json["checks"] = checks;
        o.json["overall"] = rep.overall;
        o.status = rep.overall ? exit_ok : exit_negative;
        return o;
    }
    auto rs = resolve_presentation(target);
    auto need = [](std::string const& v, char const* flag) {
        if (v.empty())
            fail(ErrorKind::parse_error, std::string("missing ") + flag);
        return v;
    };
    if (sub == "normal-form") {
        auto nf = ncpoly::normal_form(rs.parse(need(expr, "--expr")), rs);
        o.text = nf.str() + "\n";
        o.json["normal_form"] = nf.str();
    } else if (sub == "central") {
        bool c = ncpoly::is_central(rs.parse(need(expr, "--expr")), rs);
        o.text = std::string("central=") + (c ? "true" : "false") + "\n";
        o.json["central"] = c;
    } else if (sub == "identity") {
        bool holds = ncpoly::verify_identity(rs.parse(need(lhs, "--lhs")), rs.parse(need(rhs, "--rhs")), rs);
        o.text = std::string("identity=") + (holds ? "true" : "false") + "\n";
        o.json["identity"] = holds;
        o.status = holds ? exit_ok : exit_negative;
    } else {
        fail(ErrorKind::parse_error, "unknown ncpoly subcommand '" + sub + "'");
    }
    return o;
}

// examples

Outcome examples_command(std::string const& sub, std::string const& name, GlobalOptions const& g)
{
    Outcome o;
    if (sub == "list") {
        for (auto const& n : cases::builtin_names())
            o.text += n + "\n";
        o.json = {{"command", "examples list"}, {"names", cases::builtin_names()}};
        return o;
    }
    if (name.empty())
        fail(ErrorKind::parse_error, "missing case study name");
    if (sub == "export") {
        std::string doc;
        try {
            doc = io::serialize_document(cases::builtin_document(name));
        } catch (Error const& e) {
            fail(ErrorKind::parse_error, e.what());
        }
        o.text = doc;
        o.json = ordered_json::parse(doc);
        return o;
    }
    auto names = cases::builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        fail(ErrorKind::parse_error, "unknown case study '" + name + "'");
    auto rep = cases::run_case_study(name, toric::EnumerationOptions{g.threads, toric::default_point_cap});
    o.text = rep.to_text();
    o.json = ordered_json::parse(rep.to_json());
    o.status = rep.overall() ? exit_ok : exit_negative;
    return o;
}

void emit(Outcome const& o, GlobalOptions const& g)
{
    if (g.format == "json")
        std::cout << o.json.dump(2) << "\n";
    else
        std::cout << o.text;
    if (!g.out.empty()) {
        std::ofstream out(g.out, std::ios::binary);
        if (!out)
            fail(ErrorKind::parse_error, "cannot write '" + g.out + "'");
        out << o.json.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"logcentre: exact computations for log centres of orders, toric log pairs and presented algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "Write the machine-readable result to PATH");
    app.add_option("--threads", g.threads, "Worker threads for lattice point enumeration")
        ->check(CLI::Range(1u, 256u));

    std::function<Outcome()> action;

    auto* order = app.add_subcommand("order", "Hereditary orders, discriminants and canonical cover centres");
    order->require_subcommand(1);
    std::int64_t e = 0, i = 0, m = 0;
    std::string target;
    auto* omega = order->add_subcommand("omega-center", "Exponent v of Z(omega^i) = (t^v)");
    omega->add_option("--e", e, "Ramification index")->required();
    omega->add_option("--i", i, "Power of omega")->required();
    omega->callback([&] { action = [&] { return order_omega_center(e, i); }; });
    auto* disc = order->add_subcommand("discriminant", "Discriminant Q-divisor of an order");
    disc->add_option("target", target, "FILE[#name]")->required();
    disc->callback([&] { action = [&] { return order_discriminant(target); }; });
    auto* cover_center = order->add_subcommand("cover-center", "Graded valuations of the cover's centre");
    cover_center->add_option("--e", e, "Ramification index")->required();
    cover_center->add_option("--m", m, "Number of graded pieces")->required();
    cover_center->callback([&] { action = [&] { return order_cover_center(e, m); }; });

    auto* toric_cmd = app.add_subcommand("toric", "Affine toric log pairs");
    toric_cmd->require_subcommand(1);
    std::string divisor = "K+D";
    for (auto const* sub : {"qcartier", "index", "klt", "canonical", "cover", "dual-gens", "hilbert"}) {
        auto* s = toric_cmd->add_subcommand(sub);
        s->add_option("target", target, "FILE[#name]")->required();
        if (std::string(sub) == "qcartier")
            s->add_option("--divisor", divisor, "K, K+D, or comma-separated coefficients");
        std::string name = sub;
        s->callback([&, name] {
            action = [&, name] {
                return toric_command(name, target, divisor, toric::EnumerationOptions{g.threads, toric::default_point_cap});
            };
        });
    }
    toric_cmd->get_subcommand("qcartier")->description("Functional u with <u, v_i> = -n_i, or none");
    toric_cmd->get_subcommand("index")->description("Cartier index of K + D");
    toric_cmd->get_subcommand("klt")->description("Kawamata log terminal test for (X, D)");
    toric_cmd->get_subcommand("canonical")->description("Canonical singularity test for X");
    toric_cmd->get_subcommand("cover")->description("Log canonical cover of (X, D)");
    toric_cmd->get_subcommand("dual-gens")->description("Generators of the dual cone semigroup");
    toric_cmd->get_subcommand("hilbert")->description("Hilbert basis of the cone");

    auto* nc = app.add_subcommand("ncpoly", "Presented noncommutative algebras");
    nc->require_subcommand(1);
    std::string expr, lhs, rhs;
    for (auto const* sub : {"normal-form", "central", "identity", "quotient-check"}) {
        auto* s = nc->add_subcommand(sub);
        s->add_option("target", target, "FILE[#name], or a built-in name")->required();
        std::string name = sub;
        if (name == "normal-form" || name == "central")
            s->add_option("--expr", expr, "Polynomial, e.g. \"(ab-ba)^2 - 4c^6\"")->required();
        if (name == "identity") {
            s->add_option("--lhs", lhs)->required();
            s->add_option("--rhs", rhs)->required();
        }
        s->callback([&, name] { action = [&, name] { return ncpoly_command(name, target, expr, lhs, rhs); }; });
    }
    nc->get_subcommand("normal-form")->description("Normal form under the rewrite system");
    nc->get_subcommand("central")->description("Whether the element commutes with every generator");
    nc->get_subcommand("identity")->description("Whether lhs = rhs in the algebra");
    nc->get_subcommand("quotient-check")->description("Commutative quotient checks (built-in: francia-algebra)");

    auto* ex = app.add_subcommand("examples", "Built-in case studies");
    ex->require_subcommand(1);
    std::string case_name;
    auto* run = ex->add_subcommand("run", "Run every check of a case study");
    run->add_option("name", case_name, "francia or clifford")->required();
    run->callback([&] { action = [&] { return examples_command("run", case_name, g); }; });
    auto* exp = ex->add_subcommand("export", "Print the case study's input document");
    exp->add_option("name", case_name, "francia or clifford")->required();
    exp->callback([&] { action = [&] { return examples_command("export", case_name, g); }; });
    auto* list = ex->add_subcommand("list", "List case studies");
    list->callback([&] { action = [&] { return examples_command("list", "", g); }; });

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        Outcome o = action();
        emit(o, g);
        return o.status;
    } catch (Error const& err) {
        std::cerr << "logcentre: " << err.what() << "\n";
        return status_for(err.kind());
    } catch (std::exception const& err) {
        std::cerr << "logcentre: internal error: " << err.what() << "\n";
        return 1;
    }
}
