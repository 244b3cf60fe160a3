#include "logcentre/input.hpp"
#include "logcentre/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace logcentre::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(std::string const& where, std::string const& what)
{
    fail(ErrorKind::parse_error, where + ": " + what);
}

void expect_keys(json const& j, std::string const& where, std::set<std::string> const& required,
                 std::set<std::string> const& optional)
{
    if (!j.is_object())
        bad(where, "expected an object");
    for (auto const& [k, v] : j.items())
        if (!required.count(k) && !optional.count(k))
            bad(where, "unknown field '" + k + "'");
    for (auto const& k : required)
        if (!j.contains(k))
            bad(where, "missing field '" + k + "'");
}

Rational read_rational(json const& j, std::string const& where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    bad(where, "expected a rational string \"p/q\" or an integer");
}

std::int64_t read_int(json const& j, std::string const& where)
{
    if (!j.is_number_integer())
        bad(where, "expected an integer");
    return j.get<std::int64_t>();
}

std::string read_string(json const& j, std::string const& where)
{
    if (!j.is_string())
        bad(where, "expected a string");
    return j.get<std::string>();
}

json const& read_array(json const& j, std::string const& where)
{
    if (!j.is_array())
        bad(where, "expected an array");
    return j;
}

orders::OrderSpec read_order(std::string const& name, json const& j)
{
    std::string where = "object '" + name + "'";
    expect_keys(j, where, {"kind", "ramification"}, {});
    orders::OrderSpec spec{name, {}};
    for (auto const& r : read_array(j.at("ramification"), where + ".ramification")) {
        expect_keys(r, where + ".ramification[]", {"prime", "e"}, {"blocks"});
        orders::RamificationDatum datum;
        datum.prime_id = read_string(r.at("prime"), where + ".prime");
        datum.e = read_int(r.at("e"), where + ".e");
        if (datum.e < 1)
            bad(where, "ramification index must be positive");
        if (r.contains("blocks")) {
            for (auto const& b : read_array(r.at("blocks"), where + ".blocks")) {
                auto n = read_int(b, where + ".blocks[]");
                if (n < 1)
                    bad(where, "block sizes must be positive");
                datum.blocks.sizes.push_back(static_cast<std::size_t>(n));
            }
        } else {
            datum.blocks = valmat::BlockStructure::trivial(static_cast<std::size_t>(datum.e));
        }
        spec.ramification.push_back(std::move(datum));
    }
    try {
        spec.validate();
    } catch (Error const& e) {
        bad(where, e.what());
    }
    return spec;
}

ConePairRecord read_cone_pair(std::string const& name, json const& j)
{
    std::string where = "object '" + name + "'";
    expect_keys(j, where, {"kind", "rays"}, {"lattice_basis", "boundary", "labels"});
    std::vector<linalg::IntVector> rays;
    for (auto const& r : read_array(j.at("rays"), where + ".rays")) {
        linalg::IntVector v;
        for (auto const& x : read_array(r, where + ".rays[]"))
            v.push_back(read_int(x, where + ".rays[][]"));
        rays.push_back(std::move(v));
    }
    if (rays.empty())
        bad(where, "at least one ray is required");
    std::size_t dim = rays.front().size();

    try {
        toric::Lattice lattice = toric::Lattice::standard(dim == 0 ? 1 : dim);
        if (j.contains("lattice_basis")) {
            auto const& basis = read_array(j.at("lattice_basis"), where + ".lattice_basis");
            if (basis.size() != dim)
                bad(where, "lattice_basis needs one vector per dimension");
            linalg::QMatrix m(dim, dim);
            for (std::size_t c = 0; c < dim; ++c) {
                auto const& vec = read_array(basis[c], where + ".lattice_basis[]");
                if (vec.size() != dim)
                    bad(where, "lattice basis vectors must have the lattice dimension");
                for (std::size_t r = 0; r < dim; ++r)
                    m(r, c) = read_rational(vec[r], where + ".lattice_basis[][]");
            }
            lattice = toric::Lattice(m);
        }
        for (auto const& r : rays)
            if (linalg::gcd(r) > 1)
                bad(where, "ray " + format_vector(r) + " is not primitive");
        toric::Cone cone(lattice, rays);

        ConePairRecord rec{{cone, {}}, {}};
        if (j.contains("boundary")) {
            for (auto const& c : read_array(j.at("boundary"), where + ".boundary"))
                rec.pair.boundary.coeffs.push_back(read_rational(c, where + ".boundary[]"));
            if (rec.pair.boundary.coeffs.size() != rays.size())
                bad(where, "boundary needs one coefficient per ray");
        } else {
            rec.pair.boundary.coeffs.assign(rays.size(), Rational(0));
        }
        if (j.contains("labels")) {
            std::set<std::string> seen;
            for (auto const& l : read_array(j.at("labels"), where + ".labels")) {
                rec.labels.push_back(read_string(l, where + ".labels[]"));
                if (!seen.insert(rec.labels.back()).second)
                    bad(where, "duplicate label '" + rec.labels.back() + "'");
            }
            if (rec.labels.size() != rays.size())
                bad(where, "labels need one entry per ray");
        } else {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rec.labels.push_back("D" + std::to_string(i + 1));
        }
        return rec;
    } catch (Error const& e) {
        if (e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::resource_limit)
            throw;
        bad(where, e.what());
    }
}

ncpoly::RewriteSystem read_presentation(std::string const& name, json const& j)
{
    std::string where = "object '" + name + "'";
    expect_keys(j, where, {"kind", "generators", "rules"}, {"weights", "step_cap"});
    std::string gens = read_string(j.at("generators"), where + ".generators");
    std::vector<std::int64_t> weights;
    if (j.contains("weights"))
        for (auto const& w : read_array(j.at("weights"), where + ".weights"))
            weights.push_back(read_int(w, where + ".weights[]"));
    std::uint64_t cap = ncpoly::default_step_cap;
    if (j.contains("step_cap")) {
        auto c = read_int(j.at("step_cap"), where + ".step_cap");
        if (c < 1)
            bad(where, "step_cap must be positive");
        cap = static_cast<std::uint64_t>(c);
    }
    std::vector<ncpoly::Rule> rules;
    for (auto const& r : read_array(j.at("rules"), where + ".rules")) {
        expect_keys(r, where + ".rules[]", {"lhs", "rhs"}, {});
        rules.push_back({read_string(r.at("lhs"), where + ".lhs"),
                         ncpoly::parse(read_string(r.at("rhs"), where + ".rhs"), gens)});
    }
    try {
        return ncpoly::RewriteSystem(gens, weights, rules, cap);
    } catch (Error const& e) {
        if (e.kind() == ErrorKind::parse_error)
            throw;
        bad(where, e.what());
    }
}

ordered_json write_rational_vector(RationalVector const& v)
{
    ordered_json out = ordered_json::array();
    for (auto const& x : v)
        out.push_back(to_string(x));
    return out;
}

ordered_json write_object(InputObject const& obj)
{
    ordered_json out;
    if (auto const* spec = std::get_if<orders::OrderSpec>(&obj)) {
        out["kind"] = "order";
        out["ramification"] = ordered_json::array();
        for (auto const& d : spec->ramification) {
            ordered_json r;
            r["prime"] = d.prime_id;
            r["e"] = d.e;
            r["blocks"] = d.blocks.sizes;
            out["ramification"].push_back(r);
        }
    } else if (auto const* rec = std::get_if<ConePairRecord>(&obj)) {
        auto const& cone = rec->pair.cone;
        out["kind"] = "cone_pair";
        ordered_json basis = ordered_json::array();
        for (std::size_t c = 0; c < cone.dim(); ++c)
            basis.push_back(write_rational_vector(cone.lattice().basis().column(c)));
        out["lattice_basis"] = basis;
        out["rays"] = cone.rays();
        out["boundary"] = write_rational_vector(rec->pair.boundary.coeffs);
        out["labels"] = rec->labels;
    } else {
        auto const& rs = std::get<ncpoly::RewriteSystem>(obj);
        out["kind"] = "presentation";
        out["generators"] = rs.generators();
        out["weights"] = rs.weights();
        out["rules"] = ordered_json::array();
        for (auto const& rule : rs.rules())
            out["rules"].push_back({{"lhs", rule.lhs}, {"rhs", rule.rhs.str()}});
        out["step_cap"] = rs.step_cap();
    }
    return out;
}

}  // namespace

InputDocument parse_document(std::string_view json_text)
{
    std::set<std::string> names;
    std::string duplicate;
    std::string top_key;
    auto callback = [&](int depth, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::key) {
            if (depth == 1)
                top_key = parsed.get<std::string>();
            else if (depth == 2 && top_key == "objects" && !names.insert(parsed.get<std::string>()).second)
                duplicate = parsed.get<std::string>();
        }
        return true;
    };
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end(), callback);
    } catch (json::exception const& e) {
        fail(ErrorKind::parse_error, std::string("malformed JSON: ") + e.what());
    }
    if (!duplicate.empty())
        fail(ErrorKind::parse_error, "duplicate object name '" + duplicate + "'");

    expect_keys(root, "document", {"version", "objects"}, {});
    InputDocument doc;
    doc.version = read_string(root.at("version"), "document.version");
    if (doc.version != document_version)
        fail(ErrorKind::parse_error, "unsupported document version '" + doc.version + "'");
    auto const& objects = root.at("objects");
    if (!objects.is_object())
        fail(ErrorKind::parse_error, "document.objects: expected an object");
    for (auto const& [name, obj] : objects.items()) {
        if (!obj.is_object() || !obj.contains("kind"))
            fail(ErrorKind::parse_error, "object '" + name + "': missing field 'kind'");
        std::string kind = read_string(obj.at("kind"), "object '" + name + "'.kind");
        if (kind == "order")
            doc.objects.emplace(name, read_order(name, obj));
        else if (kind == "cone_pair")
            doc.objects.emplace(name, read_cone_pair(name, obj));
        else if (kind == "presentation")
            doc.objects.emplace(name, read_presentation(name, obj));
        else
            fail(ErrorKind::parse_error, "object '" + name + "': unknown kind '" + kind + "'");
    }
    return doc;
}

InputDocument load_document(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::parse_error, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize_document(InputDocument const& doc)
{
    ordered_json root;
    root["version"] = doc.version;
    root["objects"] = ordered_json::object();
    for (auto const& [name, obj] : doc.objects)
        root["objects"][name] = write_object(obj);
    return root.dump(2) + "\n";
}

InputObject const& find_object(InputDocument const& doc, std::string const& name)
{
    if (name.empty()) {
        if (doc.objects.size() != 1)
            fail(ErrorKind::parse_error, "document has several objects; select one with FILE#name");
        return doc.objects.begin()->second;
    }
    auto it = doc.objects.find(name);
    if (it == doc.objects.end())
        fail(ErrorKind::parse_error, "no object named '" + name + "'");
    return it->second;
}

}  // namespace logcentre::io
