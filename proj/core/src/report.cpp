#include "graphconf/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace graphconf {

namespace {

using nlohmann::json;

// Intersection and planar batteries get expensive on the larger bundled
// families; the optional extras (inclusion rank, generator rank) are only
// run below this 1-cell count.
constexpr std::size_t kHeavyCellLimit = 700;

void add_check(RunReport& report, const std::string& name, bool pass,
               const std::string& detail = "") {
    report.checks.push_back({name, pass, detail});
}

std::string show(long long a, long long b) {
    return std::to_string(a) + " vs " + std::to_string(b);
}

struct Pipeline {
    const GraphInput& input;
    RunReport& report;
    const RunOptions& options;

    std::optional<DiscreteConfigComplex> dcomplex;
    std::optional<HomologySummary> oracle;
    std::optional<RelativeComplex> ncomplex;
    std::optional<RelativeH2> h2;
    std::optional<PlanarStructure> ps;
    std::optional<DisjointPairSet> jset;
    std::optional<IntersectionMatrix> im_faces;

    const Graph& graph() const { return input.graph; }

    const DiscreteConfigComplex& discrete() {
        if (!dcomplex) dcomplex = build_discrete_config(graph());
        return *dcomplex;
    }

    const HomologySummary& homology() {
        if (!oracle) oracle = homology_oracle(discrete());
        return *oracle;
    }

    const RelativeComplex& relative() {
        if (!ncomplex) ncomplex = build_relative_complex(graph());
        return *ncomplex;
    }

    const RelativeH2& relative_kernel() {
        if (!h2) h2 = relative_h2(relative());
        return *h2;
    }

    bool planar_available() const { return input.rotations && input.outer; }

    const PlanarStructure& planar() {
        if (!ps) ps = trace_faces(graph(), *input.rotations, *input.outer);
        return *ps;
    }

    const DisjointPairSet& disjoint() {
        if (!jset) jset = disjoint_pairs(planar());
        return *jset;
    }

    const IntersectionMatrix& faces_intersection() {
        if (!im_faces) {
            CycleBasis basis(planar().face_cycles.begin() + 1, planar().face_cycles.end());
            im_faces = build_intersection_matrix(graph(), basis, relative(), relative_kernel());
        }
        return *im_faces;
    }

    void run_euler() {
        const DiscreteConfigComplex& d = discrete();
        EulerSection e;
        e.cells0 = d.cells0.size();
        e.cells1 = d.cells1.size();
        e.cells2 = d.cells2.size();
        e.by_cells = d.euler_characteristic();
        e.by_formula = euler_characteristic_formula(graph());
        report.euler = e;
        add_check(report, "euler-consistency", e.by_cells == e.by_formula,
                  show(e.by_cells, e.by_formula));
    }

    void run_homology() {
        const DiscreteConfigComplex& d = discrete();
        add_check(report, "boundary-squared-zero-discrete", (d.boundary1 * d.boundary2).is_zero());
        report.homology = homology();
        if (report.euler) {
            long long alt = static_cast<long long>(homology().betti[0]) -
                            static_cast<long long>(homology().betti[1]) +
                            static_cast<long long>(homology().betti[2]);
            add_check(report, "betti-euler-consistency", alt == report.euler->by_formula,
                      show(alt, report.euler->by_formula));
        }
    }

    void run_relative() {
        const RelativeComplex& n = relative();
        add_check(report, "boundary-squared-zero-relative", (n.boundary1 * n.boundary2).is_zero());
        RelativeSection section;
        section.cells2 = n.cells2.size();
        section.h2_rank = relative_kernel().rank;
        section.formula = h2_rank_formula(graph());
        GraphClassification c = report.classification;
        section.formula_applies = c.connected && !c.circle_like && !c.interval_like;
        report.relative = section;
        if (section.formula_applies)
            add_check(report, "h2-rank-formula",
                      rank_formula_check(graph(), n, relative_kernel()),
                      show(static_cast<long long>(section.h2_rank), section.formula));
    }

    void run_intersection() {
        GraphClassification c = report.classification;
        if (!c.connected || c.circle_like)
            throw HypothesisViolated(
                "intersection route requires a connected graph not homeomorphic to the circle");

        bool use_faces = options.basis == "faces";
        if (use_faces && !planar_available())
            throw HypothesisViolated("faces basis requires rotations and an outer face marker");

        IntersectionSection section;
        section.basis_kind = use_faces ? "faces" : "tree";
        const IntersectionMatrix* im = nullptr;
        std::optional<IntersectionMatrix> im_tree;
        if (use_faces) {
            im = &faces_intersection();
        } else {
            CycleBasis basis = fundamental_cycle_basis(graph());
            im_tree = build_intersection_matrix(graph(), basis, relative(), relative_kernel());
            im = &*im_tree;
        }
        section.basis_size = im->basis.size();
        section.rank = rank(im->h2_coordinates);
        const std::size_t r = im->basis.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                bool zero = true;
                for (std::size_t row = 0; row < im->matrix.rows(); ++row)
                    if (sgn(im->matrix(row, i * r + j)) != 0) zero = false;
                if (zero) section.zero_tensor_pairs.push_back({i + 1, j + 1});
            }
        }
        section.homology = config_homology(graph(), *im, &homology());
        report.intersection = section;

        add_check(report, "oracle-equivalence", section.homology.oracle_agreement,
                  "b1 " + show(section.homology.b1, homology().betti[1]) + ", b2 " +
                      show(section.homology.b2, homology().betti[2]));

        if (discrete().cells1.size() <= kHeavyCellLimit) {
            std::size_t incl = inclusion_h1_rank(graph(), discrete());
            add_check(report, "inclusion-epimorphism",
                      incl == 2 * static_cast<std::size_t>(c.first_betti),
                      show(incl, 2 * c.first_betti));
        }
    }

    void run_planar() {
        if (!planar_available())
            throw HypothesisViolated("planar analysis requires rotations and an outer face marker");

        const PlanarStructure& structure = planar();
        PlanarSection section;
        section.faces = structure.faces.size();
        section.disjoint = disjoint().pairs;
        section.regularity = check_embedding_regularity(structure, graph());
        section.formulas_apply = section.regularity.all();

        add_check(report, "disjoint-pairs-even", section.disjoint.size() % 2 == 0,
                  std::to_string(section.disjoint.size()) + " ordered pairs");

        // z_0 = z_1 + ... + z_r, the executable pin of the orientation
        // convention.
        EdgeChain sum;
        for (std::size_t i = 1; i < structure.face_cycles.size(); ++i)
            for (const auto& [eid, coeff] : structure.face_cycles[i]) sum[eid] += coeff;
        for (auto it = sum.begin(); it != sum.end();)
            it = sgn(it->second) == 0 ? sum.erase(it) : std::next(it);
        add_check(report, "outer-cycle-identity", sum == structure.face_cycles[0]);

        section.torus_basis_ok = torus_basis_check(structure, disjoint(), faces_intersection());
        add_check(report, "torus-basis", section.torus_basis_ok);

        std::size_t nullity =
            structure.bounded_count() * structure.bounded_count() -
            rank(faces_intersection().h2_coordinates);
        bool b2_agree = section.disjoint.size() == nullity &&
                        section.disjoint.size() == homology().betti[2];
        add_check(report, "planar-b2-three-routes", b2_agree,
                  std::to_string(section.disjoint.size()) + " pairs, nullity " +
                      std::to_string(nullity) + ", oracle " +
                      std::to_string(homology().betti[2]));

        if (section.formulas_apply) {
            auto [b1, b2] = planar_betti_formulas(structure, graph());
            section.formula_b1 = b1;
            section.formula_b2 = b2;
            add_check(report, "planar-betti-formulas",
                      b1 == static_cast<long long>(homology().betti[1]) &&
                          b2 == static_cast<long long>(homology().betti[2]),
                      "formulas " + std::to_string(b1) + "/" + std::to_string(b2));

            ConfigHomologyReport ch = config_homology(graph(), faces_intersection(), &homology());
            add_check(report, "coker-rank-one", ch.coker_free_rank == 1,
                      std::to_string(ch.coker_free_rank));

            if (discrete().cells1.size() <= kHeavyCellLimit) {
                H1Generators gens = h1_generator_cycles(structure, graph(), discrete());
                section.generator_count = gens.cycles.size();
                section.generator_rank = gens.rank;
                add_check(report, "generator-rank",
                          gens.rank == 2 * structure.bounded_count() + 1,
                          show(gens.rank, 2 * structure.bounded_count() + 1));
            }
        }
        report.planar = section;
    }

    void run_cup() {
        if (!planar_available())
            throw HypothesisViolated("cup products require rotations and an outer face marker");
        GraphClassification c = report.classification;
        if (!c.connected || c.circle_like)
            throw HypothesisViolated("cup products require a connected non-circle graph");

        CupSection section;
        section.table = basis_products(planar(), disjoint());
        section.verified_on_tori = verify_on_tori(section.table, planar(), disjoint());
        add_check(report, "cup-tori-pairing", section.verified_on_tori);

        const ProductTable& t = section.table;
        bool antisym = true, squares = true, special_zero = true, epsilon = true;
        auto in_j = [&](std::size_t i, std::size_t j) {
            for (const auto& p : t.h2_basis)
                if (p.first == i && p.second == j) return true;
            return false;
        };
        for (const H1Label& a : t.h1_labels) {
            for (const H1Label& b : t.h1_labels) {
                const RationalVec& ab = t.at(a, b);
                const RationalVec& ba = t.at(b, a);
                for (std::size_t k = 0; k < ab.size(); ++k)
                    if (ab[k] != -ba[k]) antisym = false;
                if (a.kind == b.kind && a.kind != H1Label::Special)
                    for (const Rational& v : ab)
                        if (sgn(v) != 0) squares = false;
                if (a.kind == H1Label::Special || b.kind == H1Label::Special)
                    for (const Rational& v : ab)
                        if (sgn(v) != 0) special_zero = false;
                if (a.kind == H1Label::Xi && b.kind == H1Label::Eta) {
                    // Three-term expansion: -e_ij eta_ij - e_i0 eta_i0 - e_0j eta_0j.
                    for (std::size_t k = 0; k < t.h2_basis.size(); ++k) {
                        auto [p, q] = t.h2_basis[k];
                        Rational expected = 0;
                        if (p == a.index && q == b.index && in_j(p, q)) expected = -1;
                        if (p == a.index && q == 0 && in_j(p, q)) expected = -1;
                        if (p == 0 && q == b.index && in_j(p, q)) expected = -1;
                        if (ab[k] != expected) epsilon = false;
                    }
                }
            }
        }
        add_check(report, "cup-antisymmetry", antisym);
        add_check(report, "cup-squares-zero", squares);
        add_check(report, "cup-special-zero", special_zero);
        add_check(report, "cup-epsilon-formula", epsilon);

        EmbeddingRegularity reg = check_embedding_regularity(planar(), graph());
        if (reg.all() && discrete().cells1.size() <= kHeavyCellLimit) {
            H1Generators gens = h1_generator_cycles(planar(), graph(), discrete());
            CohomologyBases bases =
                build_cohomology_bases(graph(), planar(), disjoint(), gens, discrete());
            // The pairing must be nonsingular: by construction it is block
            // triangular with identity diagonal blocks.
            bool unimodular = true;
            const std::size_t r = bases.r;
            for (std::size_t i = 0; i < 2 * r; ++i)
                for (std::size_t j = 0; j < 2 * r; ++j)
                    if (bases.pairing[i][j] != Rational(i == j ? 1 : 0)) unimodular = false;
            add_check(report, "pairing-nonsingular", unimodular);
        }
        report.cup = section;
    }

    void run() {
        report.classification = validate(graph());
        const std::string& cmd = options.command;
        if (cmd == "info") return;
        if (cmd == "euler") {
            run_euler();
            return;
        }
        if (cmd == "homology") {
            run_euler();
            run_homology();
            return;
        }
        if (cmd == "nform") {
            run_relative();
            return;
        }
        if (cmd == "iform") {
            run_euler();
            run_homology();
            run_relative();
            run_intersection();
            return;
        }
        if (cmd == "planar") {
            run_euler();
            run_homology();
            run_relative();
            run_planar();
            return;
        }
        if (cmd == "cup") {
            run_planar_prereqs();
            run_cup();
            return;
        }
        if (cmd == "check") {
            run_euler();
            run_homology();
            run_relative();
            GraphClassification c = report.classification;
            if (c.connected && !c.circle_like) run_intersection();
            if (planar_available()) {
                run_planar();
                if (c.connected && !c.circle_like) run_cup();
            }
            return;
        }
        throw Error("unknown command: " + cmd);
    }

    void run_planar_prereqs() {
        run_euler();
        run_homology();
        run_relative();
    }
};

json rationals_to_json(const RationalVec& v) {
    json out = json::array();
    for (const Rational& q : v) out.push_back(q.get_str());
    return out;
}

json torsion_to_json(const std::vector<mpz_class>& torsion) {
    json out = json::array();
    for (const auto& t : torsion) out.push_back(t.get_str());
    return out;
}

}  // namespace

bool RunReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

RunReport run_command(const GraphInput& input, const RunOptions& options) {
    RunReport report;
    report.command = options.command;
    report.input_digest = options.digest;
    if (options.timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        report.timestamp =
            std::to_string(std::chrono::duration_cast<std::chrono::seconds>(now).count());
    }
    Pipeline pipeline{input, report, options};
    pipeline.run();
    return report;
}

std::string report_to_json(const RunReport& r) {
    json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;

    j["classification"] = {{"connected", r.classification.connected},
                           {"circle_like", r.classification.circle_like},
                           {"interval_like", r.classification.interval_like},
                           {"essential_vertices", r.classification.essential_vertices},
                           {"first_betti", r.classification.first_betti},
                           {"euler", r.classification.euler}};
    if (r.euler)
        j["euler"] = {{"cells", {r.euler->cells0, r.euler->cells1, r.euler->cells2}},
                      {"by_cells", r.euler->by_cells},
                      {"by_formula", r.euler->by_formula}};
    if (r.homology) {
        json torsion = json::array();
        for (const auto& deg : r.homology->torsion) torsion.push_back(torsion_to_json(deg));
        j["homology"] = {{"betti", r.homology->betti}, {"torsion", torsion}};
    }
    if (r.relative)
        j["relative"] = {{"cells2", r.relative->cells2},
                         {"h2_rank", r.relative->h2_rank},
                         {"formula", r.relative->formula},
                         {"formula_applies", r.relative->formula_applies}};
    if (r.intersection) {
        const auto& s = *r.intersection;
        json zero_pairs = json::array();
        for (const auto& [a, b] : s.zero_tensor_pairs) zero_pairs.push_back({a, b});
        j["intersection"] = {{"basis", s.basis_kind},
                             {"basis_size", s.basis_size},
                             {"rank", s.rank},
                             {"zero_tensor_pairs", zero_pairs},
                             {"b1", s.homology.b1},
                             {"b2", s.homology.b2},
                             {"coker_free_rank", s.homology.coker_free_rank},
                             {"coker_torsion", torsion_to_json(s.homology.coker_torsion)},
                             {"b1_decomposition",
                              {s.homology.b1_decomposition.first,
                               s.homology.b1_decomposition.second}},
                             {"oracle_agreement", s.homology.oracle_agreement}};
    }
    if (r.planar) {
        const auto& s = *r.planar;
        json pairs = json::array();
        for (const auto& [a, b] : s.disjoint) pairs.push_back({a, b});
        j["planar"] = {{"faces", s.faces},
                       {"disjoint_pairs", pairs},
                       {"hypotheses",
                        {{"valence", s.regularity.valence_ok},
                         {"simple_faces", s.regularity.faces_simple},
                         {"connected_intersections", s.regularity.intersections_connected}}},
                       {"formulas_apply", s.formulas_apply},
                       {"formula_b1", s.formula_b1},
                       {"formula_b2", s.formula_b2},
                       {"torus_basis", s.torus_basis_ok},
                       {"generator_count", s.generator_count},
                       {"generator_rank", s.generator_rank}};
    }
    if (r.cup) {
        json entries = json::object();
        for (const auto& [key, value] : r.cup->table.entries) {
            bool nonzero = false;
            for (const Rational& q : value)
                if (sgn(q) != 0) nonzero = true;
            if (!nonzero) continue;  // keep the table readable
            entries[key.first.name() + " cup " + key.second.name()] = rationals_to_json(value);
        }
        json basis = json::array();
        for (const auto& [a, b] : r.cup->table.h2_basis) basis.push_back({a, b});
        j["cup"] = {{"h2_basis", basis},
                    {"nonzero_products", entries},
                    {"verified_on_tori", r.cup->verified_on_tori}};
    }

    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["all_passed"] = r.all_passed();
    return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream out;
    const auto& c = r.classification;
    out << "graph: " << (c.connected ? "connected" : "disconnected");
    if (c.circle_like) out << ", circle-like";
    if (c.interval_like) out << ", interval-like";
    out << ", b1 = " << c.first_betti << ", euler = " << c.euler << ", essential vertices = "
        << c.essential_vertices.size() << "\n";

    if (r.euler)
        out << "euler characteristic of D: by cells " << r.euler->by_cells << ", by formula "
            << r.euler->by_formula << "  (cells " << r.euler->cells0 << "/" << r.euler->cells1
            << "/" << r.euler->cells2 << ")\n";
    if (r.homology) {
        out << "homology of D: betti";
        for (std::size_t b : r.homology->betti) out << " " << b;
        bool has_torsion = false;
        for (const auto& deg : r.homology->torsion)
            if (!deg.empty()) has_torsion = true;
        out << (has_torsion ? ", with torsion" : ", torsion-free") << "\n";
    }
    if (r.relative) {
        out << "relative H2 rank: " << r.relative->h2_rank;
        if (r.relative->formula_applies) out << " (formula " << r.relative->formula << ")";
        out << "\n";
    }
    if (r.intersection) {
        const auto& s = *r.intersection;
        out << "intersection form (" << s.basis_kind << " basis, r = " << s.basis_size
            << "): rank " << s.rank << ", b1(F) = " << s.homology.b1 << ", b2(F) = "
            << s.homology.b2 << ", coker free rank " << s.homology.coker_free_rank << "\n";
        if (!s.zero_tensor_pairs.empty())
            out << "  " << s.zero_tensor_pairs.size()
                << " basis pair(s) intersect trivially (disjointly realizable)\n";
    }
    if (r.planar) {
        const auto& s = *r.planar;
        out << "planar: " << s.faces << " faces, |J| = " << s.disjoint.size()
            << ", hypotheses " << (s.formulas_apply ? "pass" : "fail");
        if (s.formulas_apply)
            out << ", formula b1 = " << s.formula_b1 << ", formula b2 = " << s.formula_b2;
        out << "\n";
    }
    if (r.cup) {
        std::size_t nonzero = 0;
        for (const auto& [key, value] : r.cup->table.entries)
            for (const Rational& q : value)
                if (sgn(q) != 0) {
                    ++nonzero;
                    break;
                }
        out << "cup products: " << nonzero << " nonzero products over " <<
            r.cup->table.h2_basis.size() << " torus classes\n";
    }

    for (const CheckResult& check : r.checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) out << "  (" << check.detail << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace graphconf
