// dgw: command line front end. Every command prints one JSON document on
// stdout; input errors print {"error": ...} on stderr.
// Exit codes: 0 pass, 1 a check failed, 2 bad input or usage.

#include "dgw/colax_samples.hpp"
#include "dgw/fixtures.hpp"
#include "dgw/io.hpp"
#include "dgw/keller_yang.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

using namespace dgw;
using io::json;

namespace {

struct RunConfig {
    std::string field = "rational";
    int truncation = 0;  // 0: take the order stored in the input
    unsigned seed = 20240611;
    std::string out;
};

// input was read but is unusable; the payload goes to stderr as is
struct Rejected {
    json report;
};

json envelope(const RunConfig& cfg, const std::string& command, int truncation) {
    return {{"command", command}, {"field", Field::describe()}, {"truncation", truncation}, {"seed", cfg.seed}};
}

QP load_qp(const RunConfig& cfg, const std::string& path) {
    json j = io::read_file(path);
    if (cfg.truncation > 0 && j.is_object()) j["truncation"] = cfg.truncation;
    return io::qp_from_json(j);
}

int vertex_of(const QP& qp, const std::string& name) {
    auto v = qp.q().find_vertex(name);
    if (!v) throw io::InputError("unknown vertex " + name);
    return *v;
}

json check_json(const CheckReport& r) { return {{"ok", r.ok}, {"message", r.message}, {"checks", r.checks}}; }

// the primary artifact goes to --out when given, otherwise inline
void emit(const RunConfig& cfg, json doc, const std::string& key, json artifact) {
    if (!cfg.out.empty()) {
        io::write_file(cfg.out, artifact);
        doc["output"] = cfg.out;
    } else {
        doc[key] = std::move(artifact);
    }
    std::cout << doc.dump(2) << "\n";
}

int cmd_mutate(const RunConfig& cfg, const std::string& qp_path, const std::vector<std::string>& at) {
    QP cur = load_qp(cfg, qp_path);
    json doc = envelope(cfg, "mutate", cur.order());
    json steps = json::array();
    for (const auto& name : at) {
        const int v = vertex_of(cur, name);
        auto m = check_mutable(cur, v);
        if (!m.ok)
            throw Rejected{{{"error", "not mutable"}, {"vertex", name}, {"violation", m.condition}, {"message", m.message}}};
        SplitResult split;
        try {
            split = split_reduce(premutate(cur, v));
        } catch (const MutationError& e) {
            throw Rejected{{{"error", "reduction did not stabilize"}, {"vertex", name}, {"message", e.what()}}};
        }
        json pairs = json::array();
        for (const auto& p : split.trivial_pairs)
            pairs.push_back({{"word", {p.first, p.second}}, {"coeff", io::scalar_str(p.coeff)}});
        steps.push_back({{"vertex", name}, {"trivial_pairs", pairs}, {"passes", split.passes}});
        cur = split.reduced;
    }
    doc["report"] = {{"steps", steps}, {"arrows", cur.q().arrow_count()}};
    emit(cfg, doc, "qp", io::qp_to_json(cur));
    return 0;
}

int cmd_ginzburg(const RunConfig& cfg, const std::string& qp_path, const std::string& what) {
    const QP qp = load_qp(cfg, qp_path);
    json doc = envelope(cfg, what, qp.order());
    if (what == "jacobian") {
        emit(cfg, doc, "dimensions", io::dim_table_to_json(qp.q(), jacobian_dimensions(qp)));
        return 0;
    }
    const auto gp = build_ginzburg(qp);
    if (what == "h0") {
        doc["window"] = {gp.min_degree, 0};
        emit(cfg, doc, "dimensions", io::dim_table_to_json(qp.q(), h0_dimensions(gp)));
    } else {
        emit(cfg, doc, "ginzburg", io::ginzburg_to_json(gp));
    }
    return 0;
}

int cmd_grothendieck(const RunConfig& cfg, const std::string& path, bool covering, bool adjunction) {
    auto x = io::colax_from_json(io::read_file(path));
    auto colax = check_colax(*x);
    if (!colax.ok) throw Rejected{{{"error", "not a colax functor"}, {"message", colax.message}}};
    auto gr = std::make_shared<const DgCategory>(grothendieck(*x));
    json doc = envelope(cfg, "grothendieck", 0);
    doc["truncation"] = nullptr;  // finite input, nothing is cut
    bool ok = true;
    json report = {{"colax", check_json(colax)}};
    auto axioms = check_dg_category(*gr);
    report["dg_category"] = check_json(axioms);
    ok = ok && axioms.ok;
    if (covering) {
        const auto p = canonical_morphism(x, gr);
        bool identity = true;
        const auto& I = *x->index;
        for (int i = 0; i < I.object_count(); ++i)
            for (int j = 0; j < I.object_count(); ++j)
                for (int a = 0; a < x->at_object[i]->object_count(); ++a)
                    for (int b = 0; b < x->at_object[j]->object_count(); ++b)
                        identity = identity && precovering_map(p, i, j, a, b).is_identity();
        auto cov = check_I_covering(p);
        report["covering"] = {{"verdict", identity ? "identity" : "not identity"}, {"I_covering", check_json(cov)}};
        ok = ok && identity && cov.ok;
    }
    if (adjunction) {
        auto adj = check_adjunction_identities(x, x->at_object.front());
        report["adjunction"] = check_json(adj);
        report["adjunction"]["C"] = x->index->objects.front();
        ok = ok && adj.ok;
    }
    report["ok"] = ok;
    doc["report"] = report;
    emit(cfg, doc, "category", io::dgcat_to_json(*gr));
    return ok ? 0 : 1;
}

int cmd_orbit(const RunConfig& cfg, const std::string& qp_path, const std::string& action_path,
              const std::string& then_mutate) {
    const QP qp = load_qp(cfg, qp_path);
    const GroupAction g = io::action_from_json(io::read_file(action_path), qp.q());
    auto valid = check_action(g, qp, true);
    if (!valid.ok) {
        const bool scope = valid.message.find("only free actions") != std::string::npos;
        throw Rejected{{{"error", scope ? "out of scope: the action is not free on vertices" : "invalid action"},
                        {"message", valid.message}}};
    }
    const QP og = orbit_qp(g, qp);
    json doc = envelope(cfg, "orbit", qp.order());
    json report = {{"action", check_json(valid)}};
    int code = 0;
    if (!then_mutate.empty()) {
        const int v = vertex_of(qp, then_mutate);
        std::set<std::string> members;
        for (const auto& perm : g.on_vertices) members.insert(qp.q().vertex(perm[v]));
        const std::vector<std::string> orbit(members.begin(), members.end());
        QP red, before;
        try {
            red = mutate_sequence(qp, orbit);
            before = mutate(og, vertex_of(og, orbit_name(orbit)));
        } catch (const MutationError& e) {
            throw Rejected{{{"error", "not mutable"}, {"message", e.what()}}};
        }
        const GroupAction moved = transport_action(g, qp.q(), red.q());
        auto moved_ok = check_action(moved, red, true);
        json c = {{"orbit", orbit}, {"transported_action", check_json(moved_ok)}};
        bool commute = false;
        if (moved_ok.ok) {
            const QP after = orbit_qp(moved, red);
            auto rename = arrow_renaming(before, after);
            commute = rename.has_value();
            c["mutated_then_orbit"] = io::qp_to_json(after);
            c["orbit_then_mutated"] = io::qp_to_json(before);
            if (rename) c["arrow_renaming"] = *rename;
        }
        c["commute"] = commute;
        report["commutation"] = c;
        if (!commute) code = 1;
    }
    doc["report"] = report;
    emit(cfg, doc, "qp", io::qp_to_json(og));
    return code;
}

int cmd_keller_yang(const RunConfig& cfg, const std::string& qp_path, const std::string& at,
                    const std::vector<std::string>& flips) {
    const QP qp = load_qp(cfg, qp_path);
    const int v = vertex_of(qp, at);
    auto m = check_mutable(qp, v);
    if (!m.ok) throw Rejected{{{"error", "not mutable"}, {"vertex", at}, {"violation", m.condition}, {"message", m.message}}};
    const int order = qp.order();
    const auto t = build_T(qp, v, order);
    auto f = build_generator_map(t, order);
    for (const auto& name : flips) {
        if (!f.gamma_prime.tilde->find_arrow(name)) throw io::InputError("unknown generator " + name);
        f.at(name) = scaled(f.at(name), Scalar(-1));
    }
    const auto r = check_dg_hom(t, f);
    json failures = json::array();
    for (const auto& x : r.failures) failures.push_back({{"generator", x.generator}, {"degree", x.degree}, {"reason", x.reason}});
    json doc = envelope(cfg, "keller-yang", order);
    doc["report"] = {{"ok", r.ok},
                     {"vertex", at},
                     {"checks", r.checks},
                     {"failures", failures},
                     {"max_word_length", r.max_word_length},
                     {"margin", r.margin},
                     {"flipped", flips},
                     {"generators", f.gamma_prime.tilde->arrow_count()}};
    std::cout << doc.dump(2) << "\n";
    return r.ok ? 0 : 1;
}

QP two_cycle() {
    auto q = std::make_shared<GradedQuiver>();
    q->add_vertex("1");
    q->add_vertex("2");
    q->add_arrow("a", "1", "2");
    q->add_arrow("b", "2", "1");
    return make_qp(q, 4);
}

// 1 -> 2 <- 3 with the swap of 1 and 3; the vertex 2 is fixed
std::pair<QP, GroupAction> non_free() {
    auto q = std::make_shared<GradedQuiver>();
    for (const char* v : {"1", "2", "3"}) q->add_vertex(v);
    q->add_arrow("a", "1", "2");
    q->add_arrow("b", "3", "2");
    GroupAction g;
    g.group = std::make_shared<const IndexCategory>(monoid_category({"e", "g"}, {{0, 1}, {1, 0}}));
    g.on_vertices = {{0, 1, 2}, {2, 1, 0}};
    g.on_arrows = {{0, 1}, {1, 0}};
    return {make_qp(q, 4), g};
}

int cmd_example(const RunConfig& cfg, const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto put = [&dir](const std::string& name, const json& j) {
        io::write_file(dir + "/" + name, j);
        return dir + "/" + name;
    };
    json files = json::array();
    const QP hex = fixtures::hexagon(6), tri = fixtures::triangles(6);
    files.push_back(put("hexagon.json", io::qp_to_json(hex)));
    files.push_back(put("triangles.json", io::qp_to_json(tri)));
    files.push_back(put("line.json", io::qp_to_json(fixtures::line(4))));
    files.push_back(put("two_cycle.json", io::qp_to_json(two_cycle())));
    files.push_back(put("hexagon_action.json", io::action_to_json(index_shift_action(hex.q(), 3, -2, 6), hex.q())));
    files.push_back(put("triangles_action.json", io::action_to_json(index_shift_action(tri.q(), 2, -2, 4), tri.q())));
    auto [nf, nfg] = non_free();
    files.push_back(put("non_free.json", io::qp_to_json(nf)));
    files.push_back(put("non_free_action.json", io::action_to_json(nfg, nf.q())));
    json bad = io::qp_to_json(hex);
    bad["potential"]["terms"][0]["cycle"][0] = "no_such_arrow";
    files.push_back(put("malformed.json", bad));
    auto line = fixtures::line();
    auto index = std::make_shared<const IndexCategory>(free_category(line.q()));
    auto k = std::make_shared<const DgCategory>(samples::ground_field().a);
    files.push_back(put("delta_k_line.json", io::colax_to_json(*diagonal(index, k))));
    std::mt19937 rng(cfg.seed);
    files.push_back(put("random_colax.json", io::colax_to_json(*samples::build_colax(samples::random_sample(rng)))));
    json doc = envelope(cfg, "example", 0);
    doc["truncation"] = nullptr;
    doc["files"] = files;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dg categories, Grothendieck constructions and quivers with potential"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--field", cfg.field, "rational or fp:P");
    app.add_option("--truncation", cfg.truncation, "truncation order L, overrides the input")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--out", cfg.out, "write the main result to this file");

    std::string qp_path, action_path, diagram, then_mutate, at_one, dir = "data";
    std::vector<std::string> at, flips;
    bool covering = false, adjunction = false;

    auto* mutate_cmd = app.add_subcommand("mutate", "mutate a QP at a sequence of vertices");
    mutate_cmd->add_option("--qp", qp_path)->required();
    std::string at_list;
    mutate_cmd->add_option("--at", at_list, "comma separated vertices, applied left to right");
    std::map<std::string, CLI::App*> dims;
    for (const char* name : {"ginzburg", "jacobian", "h0"}) {
        dims[name] = app.add_subcommand(name, std::string(name) + " of a QP");
        dims[name]->add_option("--qp", qp_path)->required();
    }
    auto* gr_cmd = app.add_subcommand("grothendieck", "Grothendieck construction of a colax diagram");
    gr_cmd->add_option("--diagram", diagram)->required();
    gr_cmd->add_flag("--check-covering", covering);
    gr_cmd->add_flag("--check-adjunction", adjunction);
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit QP of a free group action");
    orbit_cmd->add_option("--qp", qp_path)->required();
    orbit_cmd->add_option("--action", action_path)->required();
    orbit_cmd->add_option("--then-mutate", then_mutate, "vertex whose orbit is mutated on both sides");
    auto* ky_cmd = app.add_subcommand("keller-yang", "check the dg functor from the mutated Ginzburg algebra");
    ky_cmd->add_option("--qp", qp_path)->required();
    ky_cmd->add_option("--at", at_one)->required();
    ky_cmd->add_option("--flip-sign", flips, "negate the image of a generator");
    auto* ex_cmd = app.add_subcommand("example", "write the worked examples as JSON");
    ex_cmd->add_option("--dir", dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Field::configure(cfg.field);
        if (mutate_cmd->parsed()) {
            std::stringstream ss(at_list);
            for (std::string v; std::getline(ss, v, ',');)
                if (!v.empty()) at.push_back(v);
            return cmd_mutate(cfg, qp_path, at);
        }
        for (const auto& [name, sub] : dims)
            if (sub->parsed()) return cmd_ginzburg(cfg, qp_path, name);
        if (gr_cmd->parsed()) return cmd_grothendieck(cfg, diagram, covering, adjunction);
        if (orbit_cmd->parsed()) return cmd_orbit(cfg, qp_path, action_path, then_mutate);
        if (ky_cmd->parsed()) return cmd_keller_yang(cfg, qp_path, at_one, flips);
        if (ex_cmd->parsed()) return cmd_example(cfg, dir);
    } catch (const Rejected& r) {
        std::cerr << r.report.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return 2;
}
