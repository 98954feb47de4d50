#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphconf/graph_json.hpp"
#include "graphconf/report.hpp"

namespace {

using namespace graphconf;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --outer-face EDGE[:reverse] overrides the marker from the file.
OuterMarker parse_outer_flag(const std::string& flag) {
    auto colon = flag.find(':');
    if (colon == std::string::npos) return {flag, false};
    std::string direction = flag.substr(colon + 1);
    if (direction != "forward" && direction != "reverse")
        throw ParseError("outer-face direction must be forward or reverse");
    return {flag.substr(0, colon), direction == "reverse"};
}

struct CommonArgs {
    std::string graph_file;
    bool json = false;
    bool dot = false;
    bool timestamp = false;
    std::string outer_face;
    std::string basis = "tree";
};

int run_pipeline(const std::string& command, const CommonArgs& args) {
    std::string text = read_file(args.graph_file);
    GraphInput input = parse_graph_json(text);
    if (!args.outer_face.empty()) input.outer = parse_outer_flag(args.outer_face);

    if (args.dot) {
        if (command == "info") {
            std::cout << graph_to_dot(input.graph);
            return 0;
        }
        if (command == "homology") {
            std::cout << skeleton_to_dot(build_discrete_config(input.graph));
            return 0;
        }
    }

    RunOptions options;
    options.command = command;
    options.basis = args.basis;
    options.digest = content_digest(text);
    options.timestamp = args.timestamp;

    RunReport report = run_command(input, options);
    std::cout << (args.json ? report_to_json(report) : report_to_text(report));
    if (!report.all_passed()) {
        for (const CheckResult& c : report.checks)
            if (!c.pass) std::cerr << "failed check: " << c.name << "\n";
        return 1;
    }
    return 0;
}

int run_subdivide(const CommonArgs& args, unsigned parts) {
    std::string text = read_file(args.graph_file);
    GraphInput input = parse_graph_json(text);
    std::map<EdgeId, unsigned> counts;
    for (const Edge& e : input.graph.edges()) counts[e.id] = parts;
    GraphInput out{subdivide(input.graph, counts), std::nullopt, std::nullopt};
    std::cout << graph_to_json(out);
    return 0;
}

int run_examples(const std::string& directory) {
    for (const std::string& name : builtin::names()) {
        GraphInput input = builtin::by_name(name);
        std::string path = directory + "/" + name + ".json";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ParseError("cannot write file: " + path);
        out << graph_to_json(input);
        std::cout << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology and cohomology of two-particle graph configuration spaces"};
    app.require_subcommand(1);

    CommonArgs args;
    unsigned parts = 2;
    std::string examples_dir = ".";

    auto add_common = [&](CLI::App* cmd, bool with_basis = true) {
        cmd->add_option("graph", args.graph_file, "graph JSON file")->required();
        cmd->add_flag("--json", args.json, "structured JSON output");
        cmd->add_flag("--timestamp", args.timestamp, "include a wall-clock field");
        cmd->add_option("--outer-face", args.outer_face,
                        "outer face marker EDGE[:reverse], overrides the file");
        if (with_basis)
            cmd->add_option("--basis", args.basis, "cycle basis: tree or faces")
                ->check(CLI::IsMember({"tree", "faces"}));
    };

    CLI::App* info = app.add_subcommand("info", "graph classification");
    add_common(info, false);
    info->add_flag("--dot", args.dot, "emit the graph as DOT");

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic, two ways");
    add_common(euler, false);

    CLI::App* homology = app.add_subcommand("homology", "homology of D(Gamma,2), oracle route");
    add_common(homology, false);
    homology->add_flag("--dot", args.dot, "emit the 1-skeleton of D(Gamma,2) as DOT");

    CLI::App* nform = app.add_subcommand("nform", "relative pair H2(N,dN)");
    add_common(nform, false);

    CLI::App* iform = app.add_subcommand("iform", "intersection form route");
    add_common(iform);

    CLI::App* planar = app.add_subcommand("planar", "faces, disjoint pairs, Betti formulas");
    add_common(planar, false);

    CLI::App* cup = app.add_subcommand("cup", "cup product table");
    add_common(cup, false);

    CLI::App* check = app.add_subcommand("check", "run everything and assert all cross-checks");
    add_common(check);

    CLI::App* subdivide_cmd = app.add_subcommand("subdivide", "uniformly subdivide every edge");
    subdivide_cmd->add_option("graph", args.graph_file, "graph JSON file")->required();
    subdivide_cmd->add_option("--parts", parts, "pieces per edge")->required();

    CLI::App* examples = app.add_subcommand("examples", "write the bundled graph corpus");
    examples->add_option("--dir", examples_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return run_pipeline("info", args);
        if (euler->parsed()) return run_pipeline("euler", args);
        if (homology->parsed()) return run_pipeline("homology", args);
        if (nform->parsed()) return run_pipeline("nform", args);
        if (iform->parsed()) return run_pipeline("iform", args);
        if (planar->parsed()) return run_pipeline("planar", args);
        if (cup->parsed()) return run_pipeline("cup", args);
        if (check->parsed()) return run_pipeline("check", args);
        if (subdivide_cmd->parsed()) {
            if (parts == 0) throw ZeroParts("--parts must be positive");
            return run_subdivide(args, parts);
        }
        if (examples->parsed()) return run_examples(examples_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
