#include "cli.hpp"
#include "manifest.hpp"

#include <nonrep/construct.hpp>
#include <nonrep/decompose.hpp>
#include <nonrep/exact.hpp>
#include <nonrep/generators.hpp>
#include <nonrep/io.hpp>
#include <nonrep/verify.hpp>
#include <nonrep/version.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

using nonrep::io::json;
using std::string;
using std::vector;

namespace nonrep::cli
{
    namespace
    {
        constexpr std::uint64_t default_seed = 20240101;

        struct Options
        {
            string family, algo, property, problem;
            int n = -1, c = -1, k = 2, m = -1, p_size = -1, deg_cap = 6;
            double p = 0.5;
            std::uint64_t seed = default_seed;
            std::uint64_t budget = 0;
            string input, graph, colouring, levelling, out, out_graph, format = "json", manifest, rule = "interpolated";
            int n_max = 6, colour_max = 3;
            std::uint64_t samples = 100;
            bool filter = false;
        };

        auto need(bool ok, const string & message) -> void
        {
            if (! ok)
                throw InvalidInput(message);
        }

        auto parse_json(const string & text, const string & path) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::exception & e) {
                throw InvalidInput("cannot parse " + path + ": " + e.what());
            }
        }

        class Session
        {
        public:
            Session(const Options & o, RunManifest & manifest, std::ostream & out) :
                _o(o), _manifest(manifest), _out(out)
            {
            }

            auto load_graph(const string & path) -> Graph
            {
                need(! path.empty(), "--graph is required");
                return io::graph_from_json(parse_json(_manifest.read_input(path), path));
            }

            auto load_colouring(const Graph & g) -> Colouring
            {
                need(! _o.colouring.empty(), "--colouring is required");
                auto c = io::colouring_from_json(parse_json(_manifest.read_input(_o.colouring), _o.colouring));
                c.check_covers(g);
                return c;
            }

            auto load_levelling(const Graph & g) -> Levelling
            {
                need(! _o.levelling.empty(), "--levelling is required");
                auto l = io::levelling_from_json(parse_json(_manifest.read_input(_o.levelling), _o.levelling));
                need(l.levels.size() == std::size_t(g.order()), "levelling does not cover the graph");
                return l;
            }

            void emit(const string & path, const string & text) { _manifest.write_output(path, text, _out); }

            void emit_graph(const Graph & g, const string & path)
            {
                emit(path, _o.format == "dot" ? io::to_dot(g) : io::dump(io::to_json(g)) + "\n");
            }

            void emit_colouring(const Graph & g, const Colouring & c)
            {
                emit(_o.out, _o.format == "dot" ? io::to_dot(g, &c) : io::dump(io::to_json(c)) + "\n");
            }

        private:
            const Options & _o;
            RunManifest & _manifest;
            std::ostream & _out;
        };

        auto size_param(const Options & o) -> int
        {
            need(o.n >= 0, "this family needs a size (positional or --n)");
            return o.n;
        }

        auto cmd_gen(const Options & o, Session & s, RunManifest & manifest) -> int
        {
            const std::map<string, std::function<Graph()>> families{
                {"path", [&] { return gen_path(size_param(o)); }},
                {"cycle", [&] { return gen_cycle(size_param(o)); }},
                {"complete", [&] { return gen_complete(size_param(o)); }},
                {"star", [&] { return gen_star(size_param(o)); }},
                {"looped-path", [&] { return gen_looped_path(size_param(o)); }},
                {"petersen", [&] { return gen_petersen(); }},
                {"random-tree",
                    [&] {
                        manifest.set_seed(o.seed);
                        return gen_random_tree(size_param(o), o.seed);
                    }},
                {"random-graph",
                    [&] {
                        manifest.set_seed(o.seed);
                        return gen_random_graph(size_param(o), o.p, o.seed);
                    }},
                {"partial-ktree",
                    [&] {
                        manifest.set_seed(o.seed);
                        return gen_random_partial_ktree(size_param(o), o.k, o.deg_cap, o.seed).graph;
                    }},
                {"extremal", [&] { return gen_extremal(o.c, size_param(o)).graph; }},
                {"lex-product",
                    [&] {
                        need(o.m >= 1 && o.p_size >= 1, "lex-product needs --m and --clique");
                        return gen_lex_product(o.m, o.p_size).graph;
                    }},
                {"subdivision",
                    [&] {
                        auto rule = o.rule == "separated" ? SubdivisionRule::Separated : SubdivisionRule::Interpolated;
                        return build_subdivision(s.load_graph(o.input), rule).graph;
                    }},
            };
            auto it = families.find(o.family);
            need(it != families.end(), "unknown family '" + o.family + "'");
            s.emit_graph(it->second(), o.out);
            return 0;
        }

        auto require_family(const Graph & g, const Graph & expected, const string & what) -> void
        {
            need(g.edges() == expected.edges(), "input is not " + what + " in walk order");
        }

        auto cmd_colour(const Options & o, Session & s) -> int
        {
            auto load = [&] { return s.load_graph(o.graph); };
            if (o.algo == "extremal") {
                auto e = gen_extremal(o.c, size_param(o));
                s.emit_colouring(e.graph, e.colouring);
                return 0;
            }
            if (o.algo == "sigma-lex") {
                need(o.m >= 1 && o.p_size >= 1, "sigma-lex needs --m and --clique");
                auto lex = gen_lex_product(o.m, o.p_size);
                s.emit_colouring(lex.graph, sigma_lex_colouring(o.m, o.p_size).flat);
                return 0;
            }
            if (o.algo == "subdivision") {
                auto result = subdivision_colouring(load());
                if (! o.out_graph.empty())
                    s.emit_graph(result.subdivision.graph, o.out_graph);
                s.emit_colouring(result.subdivision.graph, result.colouring);
                return 0;
            }

            const std::map<string, std::function<Colouring(const Graph &)>> algos{
                {"path-3",
                    [&](const Graph & g) {
                        require_family(g, gen_path(g.order()), "a path");
                        return path_colouring_3(g.order());
                    }},
                {"plus-path",
                    [&](const Graph & g) {
                        require_family(g, gen_path(g.order()), "a path");
                        return plus_path_colouring_4(g.order());
                    }},
                {"levelling", [&](const Graph & g) { return levelling_colouring(g, s.load_levelling(g)); }},
                {"tree-pi", [](const Graph & g) { return tree_pi_colouring(g); }},
                {"tree-sigma", [](const Graph & g) { return tree_sigma_colouring(g).flat; }},
                {"cycle-pi",
                    [&](const Graph & g) {
                        require_family(g, gen_cycle(g.order()), "a cycle");
                        return cycle_pi_colouring(g.order()).colouring;
                    }},
                {"cycle-sigma5",
                    [&](const Graph & g) {
                        require_family(g, gen_cycle(g.order()), "a cycle");
                        return cycle_sigma5_colouring(g.order());
                    }},
                {"treewidth-path",
                    [](const Graph & g) { return treewidth_colouring(g, RepetitionMode::Path).colouring.flat; }},
                {"treewidth-walk",
                    [](const Graph & g) { return treewidth_colouring(g, RepetitionMode::Walk).colouring.flat; }},
                {"greedy-square", [](const Graph & g) { return greedy_square_colouring(g); }},
            };
            auto it = algos.find(o.algo);
            need(it != algos.end(), "unknown colouring algorithm '" + o.algo + "'");
            auto g = load();
            s.emit_colouring(g, it->second(g));
            return 0;
        }

        auto verdict_line(const string & verdict) -> json
        {
            return {{"verdict", verdict}};
        }

        auto cmd_verify(const Options & o, Session & s) -> int
        {
            auto g = s.load_graph(o.graph);
            auto check = [&](bool ok) {
                s.emit(o.out, io::dump(verdict_line(ok ? "clean" : "violated")) + "\n");
                return ok ? 0 : 2;
            };

            if (o.property == "levelling")
                return check(validate_levelling(g, s.load_levelling(g)));
            if (o.property == "shadow-complete")
                return check(validate_shadow_complete(g, s.load_levelling(g)));

            auto c = s.load_colouring(g);
            if (o.property == "proper")
                return check(is_proper(g, c));
            if (o.property == "distance2")
                return check(is_distance2(g, c));
            if (o.property == "star")
                return check(is_star_colouring(g, c));
            if (o.property == "path") {
                auto v = find_repetitive_path(g, c, o.budget);
                json line;
                int code = 0;
                switch (v.status) {
                case VerdictStatus::Clean:
                    line = verdict_line("clean");
                    break;
                case VerdictStatus::Witness:
                    line = verdict_line("witness");
                    line["witness"] = io::to_json(*v.witness);
                    code = 2;
                    break;
                case VerdictStatus::Unknown:
                    line = verdict_line("unknown");
                    code = 3;
                    break;
                }
                line["nodes"] = v.budget_spent;
                s.emit(o.out, io::dump(line) + "\n");
                return code;
            }
            if (o.property == "walk") {
                auto w = find_repetitive_walk(g, c, true);
                auto line = verdict_line(w ? "witness" : "clean");
                if (w)
                    line["witness"] = io::to_json(*w);
                s.emit(o.out, io::dump(line) + "\n");
                return w ? 2 : 0;
            }
            throw InvalidInput("unknown property '" + o.property + "'");
        }

        auto cmd_exact(const Options & o, Session & s, std::ostream & err) -> int
        {
            need(o.problem == "pi" || o.problem == "sigma", "exact expects pi or sigma");
            auto g = s.load_graph(o.graph);
            try {
                auto r = o.problem == "pi" ? exact_pi(g, o.budget) : exact_sigma(g, o.budget);
                s.emit(o.out, io::dump(io::to_json(r)) + "\n");
                return 0;
            }
            catch (const BudgetExhausted & e) {
                err << "nonrep: " << e.what() << "\n";
                return 3;
            }
        }

        auto cmd_explore(const Options & o, Session & s, RunManifest & manifest) -> int
        {
            manifest.set_seed(o.seed);
            ExplorerOptions options{o.n_max, o.colour_max, o.samples, o.seed, o.filter};
            auto report = explore_smallwalks(options);

            std::ostringstream text;
            json header{{"seed", report.seed}, {"n_max", o.n_max}, {"colour_max", o.colour_max},
                {"samples", o.samples}, {"filter_conjecture", o.filter},
                {"model", "even samples G(n,p), odd samples random recursive trees; n uniform in [2,n_max], "
                          "p uniform in [0.2,0.8], colours uniform in [1,colour_max]"}};
            text << io::dump(header) << "\n";
            for (auto & sample : report.witnesses)
                text << io::dump(io::to_json(sample)) << "\n";
            json ratios = json::object();
            for (auto [colours, ratio] : report.max_ratio)
                ratios[std::to_string(colours)] = ratio;
            json summary{{"samples", report.samples}, {"witnesses", report.witnesses.size()}, {"max_ratio", ratios}};
            text << io::dump(summary) << "\n";
            s.emit(o.out, text.str());
            return 0;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Nonrepetitive graph colouring toolkit", "nonrep"};
        app.set_version_flag("--version", string(version));
        app.require_subcommand(1);
        app.add_option("--manifest", o.manifest, "Write the run manifest here instead of stderr");

        auto add_out = [&](CLI::App * sub) {
            sub->add_option("--out", o.out, "Output file (stdout when absent)");
        };
        auto add_format = [&](CLI::App * sub) {
            sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
        };

        auto gen = app.add_subcommand("gen", "Generate a graph");
        gen->add_option("family", o.family, "path | cycle | complete | star | looped-path | petersen | random-tree | "
                                            "random-graph | partial-ktree | extremal | lex-product | subdivision")
            ->required();
        gen->add_option("size", o.n, "Number of vertices");
        gen->add_option("--n", o.n, "Number of vertices");
        gen->add_option("--c", o.c, "Colour count of the extremal family");
        gen->add_option("--k", o.k, "Treewidth of a partial k-tree");
        gen->add_option("--p", o.p, "Edge probability of random-graph");
        gen->add_option("--m", o.m, "Number of levels of lex-product");
        gen->add_option("--clique", o.p_size, "Clique size per level of lex-product");
        gen->add_option("--deg-cap", o.deg_cap, "Degree cap of partial-ktree");
        gen->add_option("--seed", o.seed, "Random seed");
        gen->add_option("--input", o.input, "Graph to subdivide");
        gen->add_option("--rule", o.rule, "Subdivision rule")->check(CLI::IsMember({"interpolated", "separated"}));
        add_out(gen);
        add_format(gen);

        auto colour = app.add_subcommand("colour", "Colour a graph with one of the constructions");
        colour->add_option("algo", o.algo, "path-3 | plus-path | levelling | tree-pi | tree-sigma | cycle-pi | "
                                           "cycle-sigma5 | subdivision | extremal | sigma-lex | treewidth-path | "
                                           "treewidth-walk | greedy-square")
            ->required();
        colour->add_option("--graph", o.graph, "Input graph");
        colour->add_option("--levelling", o.levelling, "Levelling for the levelling algorithm");
        colour->add_option("--out-graph", o.out_graph, "Where subdivision writes the subdivided graph");
        colour->add_option("--c", o.c, "Colour count for extremal");
        colour->add_option("--n", o.n, "Vertex count for extremal");
        colour->add_option("--m", o.m, "Levels for sigma-lex");
        colour->add_option("--clique", o.p_size, "Clique size per level for sigma-lex");
        add_out(colour);
        add_format(colour);

        auto verify = app.add_subcommand("verify", "Check a colouring or levelling (exit 0 clean, 2 violated, 3 unknown)");
        verify->add_option("property", o.property,
                  "proper | distance2 | star | path | walk | levelling | shadow-complete")
            ->required();
        verify->add_option("--graph", o.graph, "Input graph")->required();
        verify->add_option("--colouring", o.colouring, "Colouring to check");
        verify->add_option("--levelling", o.levelling, "Levelling to check");
        verify->add_option("--budget", o.budget, "Node budget of the path check (0 = unlimited)");
        add_out(verify);

        auto exact = app.add_subcommand("exact", "Exact pi or sigma of a small graph (exit 3 when the budget runs out)");
        exact->add_option("problem", o.problem, "pi | sigma")->required()->check(CLI::IsMember({"pi", "sigma"}));
        exact->add_option("--graph", o.graph, "Input graph")->required();
        exact->add_option("--budget", o.budget, "Node budget (0 = unlimited)");
        add_out(exact);

        auto explore = app.add_subcommand("explore", "Sample colourings and record minimum repetitive walks");
        explore->add_option("--n-max", o.n_max, "Largest sampled order");
        explore->add_option("--colours", o.colour_max, "Largest colour id");
        explore->add_option("--samples", o.samples, "Number of samples");
        explore->add_option("--seed", o.seed, "Random seed");
        explore->add_flag("--filter", o.filter, "Keep only path-nonrepetitive distance-2 colourings");
        add_out(explore);

        vector<string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        try {
            app.parse(reversed);
        }
        catch (const CLI::Success & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return 1;
        }

        RunManifest manifest(args);
        Session session(o, manifest, out);
        int code = 1;
        try {
            if (gen->parsed())
                code = cmd_gen(o, session, manifest);
            else if (colour->parsed())
                code = cmd_colour(o, session);
            else if (verify->parsed())
                code = cmd_verify(o, session);
            else if (exact->parsed())
                code = cmd_exact(o, session, err);
            else
                code = cmd_explore(o, session, manifest);
        }
        catch (const InvalidInput & e) {
            err << "nonrep: " << e.what() << "\n";
            code = 1;
        }

        auto record = io::dump(manifest.to_json(code)) + "\n";
        if (o.manifest.empty())
            err << record;
        else {
            std::ofstream file(o.manifest);
            file << record;
        }
        return code;
    }
}
