#include "agrarian_tools/jobs.hpp"

#include "agrarian/invariants.hpp"
#include "agrarian/trees.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <thread>

namespace agrarian::jobs {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

template <class Fn>
auto at_path(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const FieldParseError&) {
        throw;
    } catch (const ParseError& e) {
        throw FieldParseError(path, e);
    }
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
    if (!j.is_object()) schema(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) schema(path, "unknown field '" + k + "'");
    }
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    return j.get<std::string>();
}

long get_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<long>();
}

std::size_t get_size(const Json& j, const std::string& path) {
    long v = get_long(j, path);
    if (v < 0) schema(path, "expected a nonnegative integer");
    return std::size_t(v);
}

bool get_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) schema(path, "expected a boolean");
    return j.get<bool>();
}

std::vector<long> get_longs(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of integers");
    std::vector<long> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_long(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

// Exact rational given as an integer or a string such as "3/2".
mpq_class get_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) schema(path, "expected an integer or a rational string");
    return at_path(path, [&] { return parse_rational(j.get<std::string>()); });
}

StringMatrix get_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of rows");
    StringMatrix m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        std::string rp = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) schema(rp, "expected a row");
        std::vector<std::string> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            const auto& e = j[r][c];
            std::string ep = rp + "[" + std::to_string(c) + "]";
            if (e.is_number_integer()) row.push_back(std::to_string(e.get<long>()));
            else row.push_back(get_string(e, ep));
        }
        if (!m.empty() && row.size() != m[0].size()) schema(rp, "ragged matrix");
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<StringMatrix> get_matrices(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of matrices");
    std::vector<StringMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_matrix(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Json rational_json(const mpq_class& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return x.get_str();
}

Report rational_report(const mpq_class& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return x.get_str();
}

const std::vector<std::pair<Task, const char*>> kTasks = {
    {Task::Norm, "norm"},         {Task::Betti, "betti"},         {Task::Torsion, "torsion"},
    {Task::Polytope, "polytope"}, {Task::Inequality, "inequality"}, {Task::Fibration, "fibration"},
    {Task::Selftest, "selftest"}};

FibrationInput parse_fibration(const Json& j, const std::string& path) {
    only_keys(j, path,
              {"fiber_betti", "base_l2", "base_dim", "cover_degree", "fiber_simply_connected", "pi1_isomorphism",
               "two_degree_support", "base_aspherical_singer", "base_negatively_curved", "base_surface_euler",
               "base_three_manifold"});
    FibrationInput in;
    if (!j.contains("fiber_betti")) schema(path, "missing 'fiber_betti'");
    in.fiber_betti = get_longs(j["fiber_betti"], path + ".fiber_betti");
    if (j.contains("base_l2")) {
        const auto& b = j["base_l2"];
        if (!b.is_array()) schema(path + ".base_l2", "expected an array");
        for (std::size_t i = 0; i < b.size(); ++i)
            in.base_l2.push_back(get_rational(b[i], path + ".base_l2[" + std::to_string(i) + "]"));
    }
    if (j.contains("base_dim")) in.base_dim = int(get_long(j["base_dim"], path + ".base_dim"));
    if (j.contains("cover_degree")) in.cover_degree = get_long(j["cover_degree"], path + ".cover_degree");
    if (j.contains("fiber_simply_connected"))
        in.fiber_simply_connected = get_bool(j["fiber_simply_connected"], path + ".fiber_simply_connected");
    if (j.contains("pi1_isomorphism")) in.pi1_isomorphism = get_bool(j["pi1_isomorphism"], path + ".pi1_isomorphism");
    if (j.contains("two_degree_support"))
        in.two_degree_support = int(get_long(j["two_degree_support"], path + ".two_degree_support"));
    if (j.contains("base_aspherical_singer"))
        in.base_aspherical_singer = get_bool(j["base_aspherical_singer"], path + ".base_aspherical_singer");
    if (j.contains("base_negatively_curved"))
        in.base_negatively_curved = get_bool(j["base_negatively_curved"], path + ".base_negatively_curved");
    if (j.contains("base_surface_euler"))
        in.base_surface_euler = get_long(j["base_surface_euler"], path + ".base_surface_euler");
    if (j.contains("base_three_manifold")) {
        const auto& t = j["base_three_manifold"];
        std::string tp = path + ".base_three_manifold";
        only_keys(t, tp, {"orientable_irreducible", "positive_virtual_b1", "geometric", "nonpositively_curved"});
        ThreeManifoldHypotheses h;
        auto flag = [&](const char* k) { return t.contains(k) && get_bool(t[k], tp + "." + k); };
        h.orientable_irreducible = flag("orientable_irreducible");
        h.positive_virtual_b1 = flag("positive_virtual_b1");
        h.geometric = flag("geometric");
        h.nonpositively_curved = flag("nonpositively_curved");
        in.base_three_manifold = h;
    }
    return in;
}

Json fibration_json(const FibrationInput& in) {
    Json j;
    j["fiber_betti"] = in.fiber_betti;
    Json base = Json::array();
    for (const auto& b : in.base_l2) base.push_back(rational_json(b));
    j["base_l2"] = base;
    if (in.base_dim) j["base_dim"] = *in.base_dim;
    j["cover_degree"] = in.cover_degree;
    j["fiber_simply_connected"] = in.fiber_simply_connected;
    j["pi1_isomorphism"] = in.pi1_isomorphism;
    if (in.two_degree_support) j["two_degree_support"] = *in.two_degree_support;
    j["base_aspherical_singer"] = in.base_aspherical_singer;
    j["base_negatively_curved"] = in.base_negatively_curved;
    if (in.base_surface_euler) j["base_surface_euler"] = *in.base_surface_euler;
    if (in.base_three_manifold) {
        const auto& h = *in.base_three_manifold;
        j["base_three_manifold"] = {{"orientable_irreducible", h.orientable_irreducible},
                                    {"positive_virtual_b1", h.positive_virtual_b1},
                                    {"geometric", h.geometric},
                                    {"nonpositively_curved", h.nonpositively_curved}};
    }
    return j;
}

}  // namespace

std::string task_name(Task t) {
    for (const auto& [task, name] : kTasks)
        if (task == t) return name;
    return "?";
}

Job parse_job(const Json& j) {
    only_keys(j, "$", {"task", "group", "representation", "character", "fibered", "fibration", "complex", "options"});
    Job job;
    if (!j.contains("task")) schema("$", "missing 'task'");
    std::string task = get_string(j["task"], "task");
    bool found = false;
    for (const auto& [t, name] : kTasks)
        if (task == name) job.task = t, found = true;
    if (!found) schema("task", "unknown task '" + task + "'");

    if (j.contains("group")) job.group = get_string(j["group"], "group");
    if (j.contains("representation")) {
        const auto& r = j["representation"];
        only_keys(r, "representation", {"dim", "matrices", "inverses"});
        RepresentationSpec spec;
        if (!r.contains("dim") || !r.contains("matrices")) schema("representation", "needs 'dim' and 'matrices'");
        spec.dim = get_size(r["dim"], "representation.dim");
        spec.matrices = get_matrices(r["matrices"], "representation.matrices");
        if (r.contains("inverses")) spec.inverses = get_matrices(r["inverses"], "representation.inverses");
        job.representation = spec;
    }
    if (j.contains("character")) job.character = get_longs(j["character"], "character");
    if (j.contains("fibered")) {
        const auto& f = j["fibered"];
        only_keys(f, "fibered", {"fiber_rank", "fiber_euler"});
        FiberSpec spec;
        if (f.contains("fiber_rank")) spec.fiber_rank = get_long(f["fiber_rank"], "fibered.fiber_rank");
        if (f.contains("fiber_euler")) spec.fiber_euler = get_long(f["fiber_euler"], "fibered.fiber_euler");
        if (!spec.fiber_rank && !spec.fiber_euler) schema("fibered", "needs 'fiber_rank' or 'fiber_euler'");
        job.fibered = spec;
    }
    if (j.contains("fibration")) job.fibration = parse_fibration(j["fibration"], "fibration");
    if (j.contains("complex")) {
        const auto& c = j["complex"];
        only_keys(c, "complex", {"ranks", "boundaries"});
        if (!c.contains("ranks") || !c.contains("boundaries")) schema("complex", "needs 'ranks' and 'boundaries'");
        ComplexSpec spec;
        for (long r : get_longs(c["ranks"], "complex.ranks")) {
            if (r < 0) schema("complex.ranks", "ranks must be nonnegative");
            spec.ranks.push_back(std::size_t(r));
        }
        spec.boundaries = get_matrices(c["boundaries"], "complex.boundaries");
        job.complex = spec;
    }
    if (j.contains("options")) {
        const auto& o = j["options"];
        only_keys(o, "options", {"seed", "caps", "method", "deleted_row", "cross_check", "clause"});
        if (o.contains("seed")) job.options.seed = get_size(o["seed"], "options.seed");
        if (o.contains("caps")) {
            only_keys(o["caps"], "options.caps", {"polytope"});
            if (o["caps"].contains("polytope"))
                job.options.polytope_cap = get_size(o["caps"]["polytope"], "options.caps.polytope");
        }
        if (o.contains("method")) job.options.method = get_string(o["method"], "options.method");
        if (o.contains("deleted_row")) job.options.deleted_row = get_string(o["deleted_row"], "options.deleted_row");
        if (o.contains("cross_check")) job.options.cross_check = get_bool(o["cross_check"], "options.cross_check");
        if (o.contains("clause")) job.options.clause = get_string(o["clause"], "options.clause");
    }
    return job;
}

Json to_json(const Job& job) {
    Json j;
    j["task"] = task_name(job.task);
    if (job.group) j["group"] = *job.group;
    if (job.representation) {
        j["representation"] = {{"dim", job.representation->dim}, {"matrices", job.representation->matrices}};
        if (job.representation->inverses) j["representation"]["inverses"] = *job.representation->inverses;
    }
    if (job.character) j["character"] = *job.character;
    if (job.fibered) {
        Json f = Json::object();
        if (job.fibered->fiber_rank) f["fiber_rank"] = *job.fibered->fiber_rank;
        if (job.fibered->fiber_euler) f["fiber_euler"] = *job.fibered->fiber_euler;
        j["fibered"] = f;
    }
    if (job.fibration) j["fibration"] = fibration_json(*job.fibration);
    if (job.complex) j["complex"] = {{"ranks", job.complex->ranks}, {"boundaries", job.complex->boundaries}};
    Json o;
    if (job.options.seed) o["seed"] = *job.options.seed;
    if (job.options.polytope_cap) o["caps"] = {{"polytope", *job.options.polytope_cap}};
    o["method"] = job.options.method;
    if (job.options.deleted_row) o["deleted_row"] = *job.options.deleted_row;
    o["cross_check"] = job.options.cross_check;
    o["clause"] = job.options.clause;
    j["options"] = o;
    return j;
}

namespace {

// Everything a group-based task needs, built from the job.
struct Context {
    Presentation p;
    AbelianizationMap q;
    Representation sigma;
    BasedChainComplex complex;
    bool custom_complex = false;
    std::uint64_t seed = 1;
};

ScalarMatrix scalar_matrix(const StringMatrix& m, std::size_t dim, const std::string& path) {
    if (m.size() != dim) schema(path, "expected " + std::to_string(dim) + " rows");
    ScalarMatrix out(dim, dim, Gaussian());
    for (std::size_t r = 0; r < dim; ++r) {
        if (m[r].size() != dim) schema(path + "[" + std::to_string(r) + "]", "expected " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c)
            out(r, c) = at_path(path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                                [&] { return Gaussian::parse(m[r][c]); });
    }
    return out;
}

Context build_context(const Job& job, const Settings& settings) {
    if (!job.group) schema("group", "required for task '" + task_name(job.task) + "'");
    auto p = at_path("group", [&] { return parse_presentation(*job.group); });
    auto sigma = Representation::trivial(p);
    if (job.representation) {
        const auto& r = *job.representation;
        if (r.dim == 0) schema("representation.dim", "must be positive");
        if (r.matrices.size() != p.generator_count())
            schema("representation.matrices", "expected one matrix per generator");
        std::vector<ScalarMatrix> ms, inv;
        for (std::size_t g = 0; g < r.matrices.size(); ++g)
            ms.push_back(scalar_matrix(r.matrices[g], r.dim, "representation.matrices[" + std::to_string(g) + "]"));
        std::optional<std::vector<ScalarMatrix>> inverses;
        if (r.inverses) {
            if (r.inverses->size() != p.generator_count())
                schema("representation.inverses", "expected one matrix per generator");
            for (std::size_t g = 0; g < r.inverses->size(); ++g)
                inv.push_back(scalar_matrix((*r.inverses)[g], r.dim, "representation.inverses[" + std::to_string(g) + "]"));
            inverses = std::move(inv);
        }
        sigma = Representation(p, std::move(ms), std::move(inverses));
    }
    Context ctx{p, abelianize(p), std::move(sigma), {}, false, job.options.seed.value_or(settings.seed)};
    if (job.complex) {
        const auto& c = *job.complex;
        ctx.complex.ranks = c.ranks;
        if (c.ranks.empty() || c.boundaries.size() + 1 != c.ranks.size())
            schema("complex", "need one boundary matrix per positive degree");
        for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
            std::string bp = "complex.boundaries[" + std::to_string(i) + "]";
            const auto& m = c.boundaries[i];
            if (m.size() != c.ranks[i]) schema(bp, "expected " + std::to_string(c.ranks[i]) + " rows");
            Matrix<GroupRingElement> d(c.ranks[i], c.ranks[i + 1], GroupRingElement());
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (m[r].size() != c.ranks[i + 1]) schema(bp + "[" + std::to_string(r) + "]", "wrong row length");
                for (std::size_t col = 0; col < m[r].size(); ++col)
                    d(r, col) = at_path(bp + "[" + std::to_string(r) + "][" + std::to_string(col) + "]",
                                        [&] { return parse_group_ring_element(m[r][col], ctx.p.names()); });
            }
            ctx.complex.boundaries.push_back(std::move(d));
        }
        ctx.complex.standard_shape = false;
        ctx.complex.validate();
        ctx.custom_complex = true;
    } else {
        ctx.complex = presentation_complex(ctx.p);
    }
    return ctx;
}

Character character(const Job& job, const Context& ctx) {
    if (!job.character) schema("character", "required for task '" + task_name(job.task) + "'");
    if (job.character->size() != ctx.p.generator_count())
        schema("character", "expected one value per generator");
    return Character(ctx.p, *job.character);
}

std::string polytope_string(const PolytopeElement& e) { return e.pos.to_string() + " - " + e.neg.to_string(); }

std::vector<std::string> variable_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(k == 1 ? "s" : "s" + std::to_string(i + 1));
    return names;
}

Report norm_report(const NormReport& r, const std::string& provenance) {
    Report out;
    out["norm"] = r.value;
    out["method"] = r.method;
    out["method_agreement"] = r.methods_agree();
    if (r.thickness_value) out["thickness"] = *r.thickness_value;
    if (r.adapted_value) out["adapted_degree"] = *r.adapted_value;
    if (r.polytope) out["polytope"] = polytope_string(*r.polytope);
    out["character_coordinates"] = r.character;
    out["notes"] = r.notes;
    out["provenance"] = {{"norm", provenance}};
    return out;
}

std::optional<std::size_t> deleted_row(const Job& job, const Context& ctx) {
    if (!job.options.deleted_row) return std::nullopt;
    auto idx = ctx.p.index_of(*job.options.deleted_row);
    if (!idx) schema("options.deleted_row", "unknown generator '" + *job.options.deleted_row + "'");
    return *idx;
}

Report run_norm(const Job& job, const Settings& settings) {
    auto ctx = build_context(job, settings);
    auto phi = character(job, ctx);
    std::string method = job.options.method;
    if (method == "auto") {
        if (ctx.custom_complex) method = ctx.complex.ranks.size() == 4 ? "three_manifold" : "torsion";
        else method = ctx.p.deficiency() == 1 ? "twisted_alexander" : "torsion";
    }
    if (method == "twisted_alexander") {
        if (ctx.custom_complex) schema("options.method", "twisted_alexander uses the presentation, not a complex");
        TwistedAlexanderOptions o{deleted_row(job, ctx), job.options.cross_check, ctx.seed};
        return norm_report(twisted_alexander_norm(ctx.p, ctx.sigma, phi, o),
                           "deg Det of the Fox matrix with one generator row deleted, minus deg Det(1 - x_j)");
    }
    if (method == "torsion")
        return norm_report(agrarian_norm(ctx.complex, ctx.sigma, ctx.q, phi, ctx.seed),
                           "thickness of the torsion polytope, checked against the adapted degree");
    if (method == "three_manifold")
        return norm_report(three_manifold_norm(ctx.complex, ctx.sigma, ctx.q, phi),
                           "deg Det W - 2 deg Det(Id - sigma(g_j) q(g_j))");
    if (method == "kernel") {
        auto k = kernel_euler_characteristic(ctx.complex, ctx.sigma, ctx.q, phi, ctx.seed);
        Report out;
        out["norm"] = k.norm;
        out["method"] = "kernel_euler";
        out["kernel_betti"] = k.betti;
        out["kernel_euler"] = k.euler;
        out["degenerate"] = k.degenerate;
        bool agree = true;
        if (job.options.cross_check) {
            auto ref = agrarian_norm(ctx.complex, ctx.sigma, ctx.q, phi, ctx.seed);
            agree = ref.value == k.norm;
            if (!agree)
                throw CrossCheckFailure("kernel Euler characteristic gives " + std::to_string(k.norm) +
                                        ", torsion gives " + std::to_string(ref.value));
        }
        out["method_agreement"] = agree;
        out["provenance"] = {{"norm", "-k chi of the kernel after diagonalizing over D(Y)[t^+-1]"}};
        return out;
    }
    schema("options.method", "unknown method '" + method + "'");
}

Report run_betti(const Job& job, const Settings& settings) {
    auto ctx = build_context(job, settings);
    auto b = betti_numbers(ctx.complex, ctx.sigma, ctx.q, ctx.seed);
    long expected = long(ctx.sigma.dim()) * ctx.complex.euler_characteristic();
    if (b.alternating_sum() != expected)
        throw CrossCheckFailure("alternating Betti sum " + std::to_string(b.alternating_sum()) + " != n chi " +
                                std::to_string(expected));
    Report out;
    out["betti"] = b.values;
    out["euler"] = b.alternating_sum();
    out["n_chi"] = expected;
    out["ranks"] = b.ranks;
    out["certified_by_bounds"] = b.certified_by_bounds;
    out["provenance"] = {{"betti", b.certified_by_bounds ? "rank bounds from a random specialization and d d = 0"
                                                        : "exact fraction-free elimination"},
                         {"euler", "alternating sum, checked against n chi"}};
    return out;
}

Report run_torsion(const Job& job, const Settings& settings) {
    auto ctx = build_context(job, settings);
    auto t = torsion(ctx.complex, ctx.sigma, ctx.q, ctx.seed);
    auto names = variable_names(ctx.q.rank);
    Report out;
    out["torsion"] = t.value.to_string(names);
    out["alternative"] = t.alternative.to_string(names);
    out["polytope"] = polytope_string(t.polytope);
    if (job.character) {
        auto phi = character(job, ctx);
        auto d = adapted_degree(t.value, phi.coordinates(ctx.q));
        out["degree"] = d ? Report(*d) : Report(nullptr);
    }
    out["provenance"] = {{"torsion", "det(d + gamma) from C_even to C_odd, two contractions and two determinant algorithms"}};
    return out;
}

Report run_polytope(const Job& job, const Settings& settings) {
    auto ctx = build_context(job, settings);
    auto pe = agrarian_polytope(ctx.complex, ctx.sigma, ctx.q, ctx.seed);
    std::size_t cap = job.options.polytope_cap.value_or(polytope_cap_from_env());
    auto single = is_single(pe, cap);
    Report out;
    out["polytope"] = {{"pos", pe.pos.to_string()}, {"neg", pe.neg.to_string()}};
    out["single"] = single.status == SingleStatus::Single      ? "single"
                    : single.status == SingleStatus::NotSingle ? "not_single"
                                                               : "unknown";
    if (single.polytope) out["representative"] = single.polytope->to_string();
    if (job.character) out["thickness"] = thickness(pe, character(job, ctx).coordinates(ctx.q));
    out["provenance"] = {{"polytope", "NP(num) - NP(den) of the torsion"}, {"single", "exact decision capped at " + std::to_string(cap)}};
    return out;
}

Report run_inequality(const Job& job, const Settings& settings) {
    auto ctx = build_context(job, settings);
    auto phi = character(job, ctx);
    std::optional<FiberData> fiber;
    if (job.fibered) fiber = FiberData{job.fibered->fiber_rank, job.fibered->fiber_euler};
    TwistedAlexanderOptions o{deleted_row(job, ctx), job.options.cross_check, ctx.seed};
    auto r = check_inequality(ctx.p, ctx.sigma, phi, fiber, o);
    if (r.status == InequalityStatus::Fail)
        throw CrossCheckFailure("twisted Alexander norm " + std::to_string(r.lhs) + " exceeds n times the Thurston norm " +
                                std::to_string(*r.rhs));
    Report out;
    out["status"] = r.status == InequalityStatus::Pass ? "pass" : "incomparable";
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs ? Report(*r.rhs) : Report(nullptr);
    out["equality_expected"] = r.equality_expected;
    out["equality_holds"] = r.equality_holds;
    out["provenance"] = {{"lhs", "twisted Alexander norm"}, {"rhs", "n times -chi of the fiber"}};
    return out;
}

FibrationReport evaluate_clause(const FibrationInput& in, const std::string& clause) {
    if (clause == "auto") return evaluate_fibration(in);
    if (clause == "bound") return betti_bound(in);
    if (clause == "two_degree") return sphere_like_exact(in);
    if (clause == "surface") return surface_base(in);
    if (clause == "singer") return singer_cases(in);
    if (clause == "three_manifold") return three_manifold_base(in);
    schema("options.clause", "unknown clause '" + clause + "'");
}

Report run_fibration(const Job& job) {
    if (!job.fibration) schema("fibration", "required for task 'fibration'");
    const auto& in = *job.fibration;
    auto r = evaluate_clause(in, job.options.clause);
    Report out;
    Report values = Report::array();
    Report positive = Report::array();
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        values.push_back(rational_report(r.degrees[i].value));
        if (r.degrees[i].positive) positive.push_back(i);
    }
    out["b2"] = values;
    bool exact = r.degrees.empty() || r.degrees[0].kind == ValueKind::Exact;
    out["kind"] = exact ? "exact" : "bound";
    out["clause"] = r.clause;
    out["positive_degrees"] = positive;
    if (exact && (in.fiber_simply_connected || in.pi1_isomorphism) && !in.base_l2.empty() && job.options.cross_check) {
        auto bound = betti_bound(in).values();
        for (std::size_t i = 0; i < r.degrees.size(); ++i) {
            mpq_class b = i < bound.size() ? bound[i] : mpq_class(0);
            if (r.degrees[i].value > b)
                throw CrossCheckFailure("exact value in degree " + std::to_string(i) + " exceeds the convolution bound");
        }
        out["within_bound"] = true;
    }
    out["provenance"] = {{"b2", r.clause}};
    return out;
}

Report run_selftest(const Settings& settings) {
    Report checks;
    auto check = [&](const std::string& name, bool ok) {
        checks[name] = ok;
        if (!ok) throw CrossCheckFailure("selftest '" + name + "' failed");
    };
    auto tref = parse_presentation("<a,b | a b a b^-1 a^-1 b^-1>");
    auto sigma = Representation::trivial(tref);
    Character phi(tref, {1, 1});
    auto ta = twisted_alexander_norm(tref, sigma, phi, {std::nullopt, true, settings.seed});
    check("trefoil_norm", ta.value == 1 && ta.methods_agree());
    auto k = kernel_euler_characteristic(presentation_complex(tref), sigma, abelianize(tref), phi, settings.seed);
    check("trefoil_kernel_euler", k.norm == 1);
    auto e = euler_characteristic(presentation_complex(tref), Representation::trivial(tref, 2), abelianize(tref),
                                  settings.seed);
    check("euler_identity", e == 0);
    FibrationInput in;
    in.fiber_betti = {1, 0, 1};
    in.fiber_simply_connected = true;
    in.base_surface_euler = -2;
    check("surface_base", surface_base(in).values() == std::vector<mpq_class>{0, 2, 0, 2});
    auto x = parse_tree("((())())"), y = parse_tree("(()())"), z = parse_tree("((()))");
    check("tree_semiring", x * (y + z) == x * y + x * z && (x * y) * z == x * (y * z));
    Report out;
    out["checks"] = checks;
    out["passed"] = true;
    return out;
}

Report dispatch(const Job& job, const Settings& settings) {
    switch (job.task) {
        case Task::Norm: return run_norm(job, settings);
        case Task::Betti: return run_betti(job, settings);
        case Task::Torsion: return run_torsion(job, settings);
        case Task::Polytope: return run_polytope(job, settings);
        case Task::Inequality: return run_inequality(job, settings);
        case Task::Fibration: return run_fibration(job);
        case Task::Selftest: return run_selftest(settings);
    }
    return {};
}

Report error_report(const char* kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

}  // namespace

Outcome run_job(const Json& input, const std::string& label, const Settings& settings) {
    Outcome o;
    o.report["job"] = label;
    o.report["input"] = input;
    auto start = std::chrono::steady_clock::now();
    try {
        Job job = parse_job(input);
        o.report["task"] = task_name(job.task);
        o.report["seed"] = job.options.seed.value_or(settings.seed);
        o.report["result"] = dispatch(job, settings);
        o.report["status"] = "ok";
    } catch (const FieldParseError& e) {
        o.exit_code = kExitValidation;
        auto err = error_report("parse", e.what());
        err["path"] = e.path();
        err["position"] = e.position();
        o.report["error"] = err;
    } catch (const ParseError& e) {
        o.exit_code = kExitValidation;
        auto err = error_report("parse", e.what());
        err["position"] = e.position();
        o.report["error"] = err;
    } catch (const ValidationError& e) {
        o.exit_code = kExitValidation;
        o.report["error"] = error_report("validation", e.what());
    } catch (const UndefinedInvariant& e) {
        o.exit_code = kExitUndefined;
        o.report["error"] = error_report("undefined_invariant", e.what());
    } catch (const CrossCheckFailure& e) {
        o.exit_code = kExitCrossCheck;
        o.report["error"] = error_report("cross_check_failure", e.what());
    } catch (const DomainError& e) {
        o.exit_code = kExitValidation;
        o.report["error"] = error_report("domain", e.what());
    } catch (const std::exception& e) {
        o.exit_code = kExitCrossCheck;
        o.report["error"] = error_report("internal", e.what());
    }
    if (o.exit_code != kExitOk) o.report["status"] = "error";
    o.report["exit_code"] = o.exit_code;
    if (settings.timing)
        o.report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return o;
}

std::vector<Json> read_job_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read job file " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what(), e.byte);
    }
    if (j.is_array()) return j.get<std::vector<Json>>();
    return {j};
}

std::vector<Outcome> run_batch(const std::vector<std::pair<std::string, Json>>& jobs, const Settings& settings,
                               std::size_t threads) {
    std::vector<Outcome> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) out[i] = run_job(jobs[i].second, jobs[i].first, settings);
    };
    threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    return out;
}

}  // namespace agrarian::jobs
