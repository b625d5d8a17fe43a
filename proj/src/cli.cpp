#include "reflexorb/cli.hpp"

#include "reflexorb/cy_hodge.hpp"
#include "reflexorb/error.hpp"
#include "reflexorb/fan.hpp"
#include "reflexorb/io.hpp"
#include "reflexorb/jacobian.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace reflexorb {

using json = nlohmann::json;

namespace {

json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json vector_json(const LatticeVector& v)
{
    json a = json::array();
    for (const auto& x : v.coords())
        a.push_back(integer_json(x));
    return a;
}

json vectors_json(std::span<const LatticeVector> vs)
{
    json a = json::array();
    for (const auto& v : vs)
        a.push_back(vector_json(v));
    return a;
}

json rationals_json(std::span<const Rational> qs)
{
    json a = json::array();
    for (const auto& q : qs)
        a.push_back(to_string(q));
    return a;
}

std::string tsv_vector(const LatticeVector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            s += ',';
        s += v[i].get_str();
    }
    return s;
}

template <typename T>
std::string tsv_list(const std::vector<T>& xs)
{
    std::ostringstream ss;
    for (std::size_t i = 0; i < xs.size(); ++i)
        ss << (i ? "," : "") << xs[i];
    return ss.str();
}

// Input polytope together with its header fields.
struct Loaded {
    LatticePolytope polytope;
    json header;
};

struct Context {
    const RunConfig& config;
    Loaded input;

    bool tsv() const { return config.format == "tsv"; }

    ReflexivePair pair() const
    {
        if (!is_reflexive(input.polytope))
            throw Error(ErrorCode::not_reflexive, "input polytope is not reflexive");
        return config.dual ? ReflexivePair::from_delta(input.polytope) : ReflexivePair::from_polar(input.polytope);
    }
};

Loaded load(const RunConfig& config)
{
    const bool has_file = config.input_path.has_value();
    const bool has_weights = config.weights.has_value();
    if (has_file == has_weights)
        throw Error(ErrorCode::invalid_argument, "give exactly one input: a vertex file or --weights");

    LatticePolytope p = has_file ? parse_vertex_file(*config.input_path) : wps_polytope(*config.weights);
    json h;
    h["tool_version"] = tool_version;
    h["input_hash"] = input_hash(p.vertices());
    h["n"] = p.dim();
    // Ray count of the fan: vertices of Δ°, which are the facet normals when the input is Δ.
    h["r"] = config.dual ? p.facets().size() : p.vertices().size();
    return {std::move(p), std::move(h)};
}

json sector_box_json(const Cone& cone, const BoxElement& b)
{
    json j;
    j["cone_rays"] = cone.ray_ids;
    j["cone_key"] = vectors_json(cone.key());
    j["box_point"] = vector_json(b.point);
    j["coeffs"] = rationals_json(b.coeffs);
    j["age"] = to_string(b.age);
    return j;
}

json cy_sectors_json(const ReflexivePair& pair, const std::vector<CySector>& sectors)
{
    const Fan fan = normal_fan(pair);
    json a = json::array();
    for (const auto& s : sectors) {
        json j = sector_box_json(fan.cones()[s.cone], s.box);
        const Face& face = pair.polar().faces()[s.face];
        j["face_dim"] = s.face_dim;
        j["face_vertices"] = face.vertex_ids;
        j["dual_face_dim"] = pair.delta().faces()[pair.dual_of_polar_face(s.face)].dim;
        j["age"] = integer_json(s.age);
        j["components"] = integer_json(s.components);
        j["h_top"] = s.h_top ? integer_json(*s.h_top) : json(nullptr);
        j["used_by_formulas"] = s.used_by_formulas();
        if (!s.used_by_formulas())
            j["note"] = "age > 1: listed only, not used by the h11/hn21 formulas";
        a.push_back(std::move(j));
    }
    return a;
}

std::string hn21_key(std::size_t n)
{
    return "h" + std::to_string(n >= 2 ? n - 2 : 0) + "1";
}

json hodge_json(const ReflexivePair& pair, const HodgeReport& rep)
{
    json j;
    j["l_delta"] = rep.l_delta;
    j["l_polar"] = rep.l_polar;
    j["h11"] = rep.h11_untwisted;
    j["h11_untwisted"] = rep.h11_untwisted;
    j["h11_orb"] = rep.h11_orb;
    j["hn21_untwisted"] = rep.hn21_untwisted;
    j["hn21_orb"] = rep.hn21_orb;
    // Conventional names (h21, h31, ...) unless they would shadow h11 at n = 3.
    if (hn21_key(rep.n) != "h11") {
        j[hn21_key(rep.n)] = rep.hn21_untwisted;
        j[hn21_key(rep.n) + "_orb"] = rep.hn21_orb;
    }
    j["audit"] = {{"age_one_components", rep.age_one_components},
                  {"edge_correction", rep.edge_correction},
                  {"h11_split", {rep.h11_untwisted, rep.age_one_components}},
                  {"hn21_split", {rep.hn21_untwisted, rep.edge_correction}}};
    j["sectors"] = cy_sectors_json(pair, rep.sectors);
    if (rep.diamond) {
        json d = json::array();
        for (const auto& row : rep.diamond->h)
            d.push_back(row);
        j["diamond"] = d;
        j["euler_characteristic"] = rep.diamond->euler_characteristic();
    }
    if (rep.forced)
        j["warning"] = "n < 4: formulas evaluated outside their range of validity (--force)";
    return j;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

// ---- subcommands -----------------------------------------------------------

RunResult cmd_info(Context& ctx)
{
    const auto& p = ctx.input.polytope;
    json j = ctx.input.header;
    j["role"] = ctx.config.dual ? "delta" : "polar";
    j["vertices"] = p.vertices().size();
    j["facets"] = p.facets().size();
    j["f_vector"] = p.f_vector();
    j["lattice_points"] = p.points().size();
    j["interior_points"] = p.whole().l_star();
    j["reflexive"] = is_reflexive(p);
    if (ctx.tsv()) {
        std::string s;
        for (auto it = j.begin(); it != j.end(); ++it)
            s += it.key() + "\t" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
        return {exit_ok, s, ""};
    }
    return {exit_ok, dump(j), ""};
}

RunResult cmd_reflexive(Context& ctx)
{
    const bool refl = is_reflexive(ctx.input.polytope);
    json j = ctx.input.header;
    j["reflexive"] = refl;
    const int code = refl ? exit_ok : exit_not_reflexive;
    if (ctx.tsv())
        return {code, std::string("reflexive\t") + (refl ? "true" : "false") + "\n", ""};
    return {code, dump(j), ""};
}

RunResult cmd_dual(Context& ctx)
{
    const LatticePolytope d = polar_dual(ctx.input.polytope);
    if (ctx.tsv())
        return {exit_ok, format_vertex_matrix(d.vertices()), ""};
    json j = ctx.input.header;
    j["vertices"] = vectors_json(d.vertices());
    return {exit_ok, dump(j), ""};
}

RunResult cmd_faces(Context& ctx)
{
    const auto& p = ctx.input.polytope;
    std::optional<ReflexivePair> pair;
    if (is_reflexive(p))
        pair = ctx.pair();
    // With --dual the input is Δ; the pair stores it as delta().
    auto dual_of = [&](std::size_t i) -> const Face& {
        return ctx.config.dual ? pair->polar().faces()[pair->dual_of_delta_face(i)]
                               : pair->delta().faces()[pair->dual_of_polar_face(i)];
    };

    json faces = json::array();
    std::string tsv = "dim\tvertices\tfacets\tl\tl_star\tdual_dim\tdual_l_star\n";
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
        const Face& f = p.faces()[i];
        json jf;
        jf["dim"] = f.dim;
        jf["vertices"] = f.vertex_ids;
        jf["facets"] = f.active_facets;
        jf["l"] = f.l();
        jf["l_star"] = f.l_star();
        jf["interior_points"] = vectors_json(f.interior_points);
        std::string dual_cols = "\t\t";
        if (pair && p.is_proper(i)) {
            const Face& d = dual_of(i);
            jf["dual_face"] = {{"dim", d.dim}, {"vertices", d.vertex_ids}, {"l_star", d.l_star()}};
            dual_cols = "\t" + std::to_string(d.dim) + "\t" + std::to_string(d.l_star());
        }
        faces.push_back(std::move(jf));
        tsv += std::to_string(f.dim) + "\t" + tsv_list(f.vertex_ids) + "\t" + tsv_list(f.active_facets) + "\t" +
               std::to_string(f.l()) + "\t" + std::to_string(f.l_star()) + dual_cols + "\n";
    }
    if (ctx.tsv())
        return {exit_ok, tsv, ""};
    json j = ctx.input.header;
    j["faces"] = std::move(faces);
    return {exit_ok, dump(j), ""};
}

RunResult cmd_points(Context& ctx)
{
    const auto& p = ctx.input.polytope;
    std::vector<LatticeVector> pts = lattice_points(p, ctx.config.dilate);
    if (ctx.config.interior_only) {
        const Integer k = ctx.config.dilate;
        std::erase_if(pts, [&](const LatticeVector& m) {
            return std::any_of(p.facets().begin(), p.facets().end(),
                               [&](const FacetInequality& f) { return sgn(dot(m, f.normal) + k * f.offset) == 0; });
        });
    }
    if (ctx.tsv()) {
        std::string s;
        for (const auto& m : pts) {
            for (std::size_t i = 0; i < m.dim(); ++i)
                s += (i ? "\t" : "") + m[i].get_str();
            s += "\n";
        }
        return {exit_ok, s, ""};
    }
    json j = ctx.input.header;
    j["dilate"] = ctx.config.dilate;
    j["interior_only"] = ctx.config.interior_only;
    j["count"] = pts.size();
    j["points"] = vectors_json(pts);
    return {exit_ok, dump(j), ""};
}

RunResult cmd_sectors_toric(Context& ctx)
{
    const ReflexivePair pair = ctx.pair();
    const Fan fan = normal_fan(pair);
    const auto sectors = toric_twisted_sectors(fan);
    json a = json::array();
    std::string tsv = "cone_rays\tbox_point\tcoeffs\tage\tsupport_dim\tgroup_order\n";
    for (const auto& s : sectors) {
        const Cone& c = fan.cones()[s.cone];
        json j = sector_box_json(c, s.box);
        j["support_dim"] = s.support_dim;
        j["group_order"] = integer_json(s.group_order);
        a.push_back(std::move(j));
        std::vector<std::string> coeffs;
        for (const auto& q : s.box.coeffs)
            coeffs.push_back(to_string(q));
        tsv += tsv_list(c.ray_ids) + "\t" + tsv_vector(s.box.point) + "\t" + tsv_list(coeffs) + "\t" +
               to_string(s.box.age) + "\t" + std::to_string(s.support_dim) + "\t" + s.group_order.get_str() + "\n";
    }
    if (ctx.tsv())
        return {exit_ok, tsv, ""};
    json j = ctx.input.header;
    j["count"] = sectors.size();
    j["sectors"] = std::move(a);
    return {exit_ok, dump(j), ""};
}

RunResult cmd_sectors_cy(Context& ctx)
{
    const ReflexivePair pair = ctx.pair();
    const auto sectors = cy_twisted_sectors(pair);
    if (ctx.tsv()) {
        std::string tsv = "face_dim\tface_vertices\tbox_point\tage\tcomponents\th_top\n";
        for (const auto& s : sectors)
            tsv += std::to_string(s.face_dim) + "\t" + tsv_list(pair.polar().faces()[s.face].vertex_ids) + "\t" +
                   tsv_vector(s.box.point) + "\t" + s.age.get_str() + "\t" + s.components.get_str() + "\t" +
                   (s.h_top ? s.h_top->get_str() : "") + "\n";
        return {exit_ok, tsv, ""};
    }
    json j = ctx.input.header;
    j["count"] = sectors.size();
    j["sectors"] = cy_sectors_json(pair, sectors);
    return {exit_ok, dump(j), ""};
}

RunResult cmd_hodge(Context& ctx)
{
    const ReflexivePair pair = ctx.pair();
    const HodgeReport rep = hodge_report(pair, ctx.config.force);
    json j = ctx.input.header;
    j.update(hodge_json(pair, rep));
    if (ctx.tsv()) {
        const std::string k = hn21_key(rep.n);
        std::string s;
        s += "h11\t" + std::to_string(rep.h11_untwisted) + "\n";
        s += "h11_orb\t" + std::to_string(rep.h11_orb) + "\n";
        s += k + "\t" + std::to_string(rep.hn21_untwisted) + "\n";
        s += k + "_orb\t" + std::to_string(rep.hn21_orb) + "\n";
        s += "l_delta\t" + std::to_string(rep.l_delta) + "\n";
        s += "l_polar\t" + std::to_string(rep.l_polar) + "\n";
        s += "sectors\t" + std::to_string(rep.sectors.size()) + "\n";
        return {exit_ok, s, ""};
    }
    return {exit_ok, dump(j), ""};
}

RunResult cmd_mirror(Context& ctx)
{
    const ReflexivePair pair = ctx.pair();
    const MirrorReport rep = mirror_check(pair, ctx.config.force);
    json j = ctx.input.header;
    j["status"] = !rep.hypothesis_met ? "hypothesis unmet" : rep.passed() ? "pass" : "fail";
    if (!rep.hypothesis_met) {
        j["reason"] = rep.reason;
    } else {
        auto side = [&](const HodgeReport& r) {
            json o = {{"h11_orb", r.h11_orb}, {"hn21_orb", r.hn21_orb}};
            if (hn21_key(r.n) != "h11")
                o[hn21_key(r.n) + "_orb"] = r.hn21_orb;
            return o;
        };
        j["original"] = side(*rep.original);
        j["swapped"] = side(*rep.swapped);
        j["h11_matches"] = rep.h11_matches;
        j["hn21_matches"] = rep.hn21_matches;
    }
    if (ctx.tsv()) {
        std::string s = "status\t" + j["status"].get<std::string>() + "\n";
        if (rep.hypothesis_met) {
            s += "original\t" + std::to_string(rep.original->h11_orb) + "\t" + std::to_string(rep.original->hn21_orb) + "\n";
            s += "swapped\t" + std::to_string(rep.swapped->h11_orb) + "\t" + std::to_string(rep.swapped->hn21_orb) + "\n";
        }
        return {exit_ok, s, ""};
    }
    return {exit_ok, dump(j), ""};
}

RunResult cmd_oracle_jacobian(Context& ctx)
{
    const ReflexivePair pair = ctx.pair();
    const JacobianReport rep = jacobian_rank_check(pair, ctx.config.seed, ctx.config.force);
    json j = ctx.input.header;
    j["seed"] = rep.seed;
    j["attempts"] = rep.attempts;
    j["rank"] = rep.rank;
    j["gamma"] = rep.gamma;
    j["l_delta"] = rep.l_delta;
    j["quotient"] = rep.quotient;
    j["formula"] = rep.formula;
    j["generic"] = rep.generic;
    j["agrees"] = rep.agrees;
    if (!rep.generic)
        j["warning"] = "non-generic draws";
    if (ctx.tsv()) {
        std::string s;
        for (const char* key : {"rank", "gamma", "l_delta", "quotient", "formula", "agrees"})
            s += std::string(key) + "\t" + j[key].dump() + "\n";
        return {exit_ok, s, ""};
    }
    return {exit_ok, dump(j), ""};
}

RunResult cmd_wps(Context& ctx)
{
    if (!ctx.config.weights)
        throw Error(ErrorCode::invalid_argument, "wps needs --weights");
    const auto& p = ctx.input.polytope;
    if (ctx.tsv())
        return {exit_ok, format_vertex_matrix(p.vertices()), ""};
    json j = ctx.input.header;
    j["weights"] = *ctx.config.weights;
    j["vertices"] = vectors_json(p.vertices());
    j["reflexive"] = true;
    return {exit_ok, dump(j), ""};
}

const std::map<std::string, std::function<RunResult(Context&)>>& handlers()
{
    static const std::map<std::string, std::function<RunResult(Context&)>> table = {
        {"info", cmd_info},
        {"reflexive", cmd_reflexive},
        {"dual", cmd_dual},
        {"faces", cmd_faces},
        {"points", cmd_points},
        {"sectors-toric", cmd_sectors_toric},
        {"sectors-cy", cmd_sectors_cy},
        {"hodge", cmd_hodge},
        {"mirror", cmd_mirror},
        {"oracle-jacobian", cmd_oracle_jacobian},
        {"wps", cmd_wps},
    };
    return table;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::not_reflexive:
        return exit_not_reflexive;
    case ErrorCode::not_simplicial:
        return exit_not_simplicial;
    case ErrorCode::parse_error:
    case ErrorCode::not_full_dimensional:
        return exit_parse_error;
    case ErrorCode::hypothesis_violation:
        return exit_hypothesis;
    case ErrorCode::invalid_argument:
        break;
    }
    return exit_usage;
}

}  // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : handlers())
            v.push_back(k);
        return v;
    }();
    return names;
}

std::string input_hash(std::span<const LatticeVector> vertices)
{
    std::vector<LatticeVector> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    const std::string text = format_vertex_matrix(sorted);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

RunResult run(const RunConfig& config)
{
    const auto it = handlers().find(config.command);
    if (it == handlers().end())
        return {exit_usage, "", "unknown subcommand '" + config.command + "'\n"};
    if (config.format != "json" && config.format != "tsv")
        return {exit_usage, "", "unknown format '" + config.format + "'\n"};
    try {
        Context ctx{config, load(config)};
        return it->second(ctx);
    } catch (const Error& e) {
        return {exit_code_for(e.code()), "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace reflexorb
