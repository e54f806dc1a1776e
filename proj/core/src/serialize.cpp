#include "afreg/serialize.hpp"

#include <json.hpp>

namespace afreg {

std::string to_json(const Dfa& d) {
    nlohmann::ordered_json j;
    j["alphabet"] = d.alphabet().symbols();
    j["states"] = d.state_count();
    j["start"] = d.start();
    j["accepting"] = d.accepting_states();
    const int k = d.alphabet().size();
    std::vector<std::vector<int>> rows;
    for (int q = 0; q < d.state_count(); ++q) {
        std::vector<int> row(k);
        for (int s = 0; s < k; ++s) row[s] = d.next(q, s);
        rows.push_back(std::move(row));
    }
    j["transitions"] = rows;
    return j.dump(2) + "\n";
}

std::string to_dot(const Dfa& d) {
    std::string out = "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (int q = 0; q < d.state_count(); ++q)
        out += "  q" + std::to_string(q) + " [shape=" +
               (d.is_accepting(q) ? "doublecircle" : "circle") + "];\n";
    out += "  __start -> q" + std::to_string(d.start()) + ";\n";
    for (int q = 0; q < d.state_count(); ++q)
        for (int s = 0; s < d.alphabet().size(); ++s)
            out += "  q" + std::to_string(q) + " -> q" +
                   std::to_string(d.next(q, s)) + " [label=\"" +
                   d.alphabet().name(s) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace afreg
