#include "bdproc/corpus.hpp"

#include <stdexcept>

namespace bdproc {

namespace {

net_desc desc(std::string name, std::vector<std::pair<id, std::uint64_t>> places,
              std::vector<id> transitions,
              std::vector<net_desc::arc> arcs) {
    net_desc d;
    d.name = std::move(name);
    for (auto& [p, k] : places) {
        d.places.push_back(p);
        if (k > 0) d.marking.emplace_back(p, k);
    }
    d.transitions = std::move(transitions);
    d.arcs = std::move(arcs);
    return d;
}

}  // namespace

std::vector<corpus_net> corpus() {
    std::vector<corpus_net> out;

    {
        // Three marked places feeding a, b and c; a and b race to fill place 4,
        // c consumes 3 and one of the 4-tokens. Two maximal runs, one swap apart.
        corpus_net c;
        c.name = "fig1";
        c.n = net::make(desc("fig1",
                             {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 0}, {"5", 0}},
                             {"a", "b", "c"},
                             {{"1", "a"}, {"a", "4"}, {"2", "b"}, {"b", "4"},
                              {"3", "c"}, {"4", "c"}, {"c", "5"}}));
        c.expect.binary_conflict_free = verdict::holds;
        c.expect.conflict_free = verdict::holds;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::holds;
        c.expect.reachable_structural_conflict = verdict::fails;
        c.expect.has_structural_pairs = false;
        c.expect.reachable_marking_count = 7;
        c.expect.maximal_process_count = 2;
        c.expect.maximal_class_count = 1;
        c.expect.process_count_depth3 = 8;
        out.push_back(std::move(c));
    }
    {
        // Place p holds two tokens shared by a, b and c; d refills p once.
        // Three-way conflict at the start, yet a single run up to swapping.
        corpus_net c;
        c.name = "fig2";
        c.n = net::make(desc("fig2",
                             {{"p", 2}, {"pa", 1}, {"pb", 1}, {"pc", 1}, {"pd", 1}, {"q", 0}},
                             {"a", "b", "c", "d"},
                             {{"p", "a"}, {"pa", "a"}, {"a", "q"},
                              {"p", "b"}, {"pb", "b"}, {"b", "q"},
                              {"p", "c"}, {"pc", "c"}, {"c", "q"},
                              {"q", "d"}, {"pd", "d"}, {"d", "p"}}));
        c.expect.binary_conflict_free = verdict::fails;
        c.expect.conflict_free = verdict::fails;
        c.expect.persistent = verdict::fails;
        c.expect.structural_conflict_net = verdict::fails;
        c.expect.reachable_structural_conflict = verdict::holds;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 14;
        c.expect.maximal_class_count = 1;
        out.push_back(std::move(c));
    }
    {
        // Two self-loops on one marked place: persistent, yet t and u are in
        // binary conflict because the step {t,u} needs two tokens.
        corpus_net c;
        c.name = "fig3";
        c.n = net::make(desc("fig3", {{"p", 1}}, {"t", "u"},
                             {{"p", "t"}, {"t", "p"}, {"p", "u"}, {"u", "p"}}));
        c.expect.binary_conflict_free = verdict::fails;
        c.expect.conflict_free = verdict::fails;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::holds;
        c.expect.reachable_structural_conflict = verdict::holds;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 1;
        c.expect.maximal_process_count = 0;  // every finite process extends
        c.expect.maximal_class_count = 0;
        out.push_back(std::move(c));
    }
    {
        // Structural conflict on an unmarked place: no behaviour at all.
        corpus_net c;
        c.name = "fig4-left";
        c.n = net::make(desc("fig4-left", {{"p", 0}}, {"t", "u"},
                             {{"p", "t"}, {"p", "u"}}));
        c.expect.binary_conflict_free = verdict::holds;
        c.expect.conflict_free = verdict::holds;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::holds;
        c.expect.reachable_structural_conflict = verdict::fails;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 1;
        c.expect.maximal_process_count = 1;  // the empty process
        c.expect.maximal_class_count = 1;
        c.expect.process_count_depth3 = 1;
        out.push_back(std::move(c));
    }
    {
        // t and u share p2, but u also needs the never-marked q2.
        corpus_net c;
        c.name = "fig4-right";
        c.n = net::make(desc("fig4-right", {{"p2", 1}, {"q2", 0}}, {"t", "u"},
                             {{"p2", "t"}, {"p2", "u"}, {"q2", "u"}}));
        c.expect.binary_conflict_free = verdict::holds;
        c.expect.conflict_free = verdict::holds;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::holds;
        c.expect.reachable_structural_conflict = verdict::fails;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 2;
        c.expect.maximal_process_count = 1;
        c.expect.maximal_class_count = 1;
        c.expect.process_count_depth3 = 2;
        out.push_back(std::move(c));
    }
    {
        // Both transitions can fire jointly thanks to the two tokens in q:
        // a reachable structural conflict without any choice to resolve.
        corpus_net c;
        c.name = "fig5";
        c.n = net::make(desc("fig5", {{"p", 1}, {"q", 2}, {"r", 1}}, {"t", "u"},
                             {{"p", "t"}, {"q", "t"}, {"q", "u"}, {"r", "u"}}));
        c.expect.binary_conflict_free = verdict::holds;
        c.expect.conflict_free = verdict::holds;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::fails;
        c.expect.reachable_structural_conflict = verdict::holds;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 4;
        c.expect.maximal_process_count = 1;
        c.expect.maximal_class_count = 1;
        c.expect.process_count_depth3 = 4;
        out.push_back(std::move(c));
    }
    {
        // Self-loops a on {1,2} and b on {2,3} with place 2 holding two
        // tokens. Every marking is the initial one; maximality of infinite
        // runs diverges from largest-run maximality here.
        corpus_net c;
        c.name = "fig6";
        c.n = net::make(desc("fig6", {{"1", 1}, {"2", 2}, {"3", 1}}, {"a", "b"},
                             {{"1", "a"}, {"a", "1"}, {"2", "a"}, {"a", "2"},
                              {"2", "b"}, {"b", "2"}, {"3", "b"}, {"b", "3"}}));
        c.expect.binary_conflict_free = verdict::holds;
        c.expect.conflict_free = verdict::holds;
        c.expect.persistent = verdict::holds;
        c.expect.structural_conflict_net = verdict::fails;
        c.expect.reachable_structural_conflict = verdict::holds;
        c.expect.has_structural_pairs = true;
        c.expect.reachable_marking_count = 1;
        c.expect.maximal_process_count = 0;
        c.expect.maximal_class_count = 0;
        out.push_back(std::move(c));
    }
    return out;
}

const corpus_net& corpus_by_name(const std::string& name) {
    static const std::vector<corpus_net> nets = corpus();
    for (const auto& c : nets)
        if (c.name == name) return c;
    throw error("no corpus net named '" + name + "'");
}

}  // namespace bdproc
