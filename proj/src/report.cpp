#include "opgeo/report.hpp"

#include <json.hpp>
#include <sstream>

namespace opgeo {

bool Report::all_passed() const { return total_failures() == 0 && total_uncertain() == 0; }

uint64_t Report::total_failures() const {
    uint64_t n = 0;
    for (const auto& a : axioms) n += a.fail;
    return n;
}

uint64_t Report::total_uncertain() const {
    uint64_t n = 0;
    for (const auto& a : axioms) n += a.uncertain;
    return n;
}

std::string Report::to_json(bool include_timing, int indent) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    j["axioms"] = nlohmann::ordered_json::array();
    for (const auto& a : axioms) {
        nlohmann::ordered_json ja;
        ja["name"] = a.name;
        ja["pass"] = a.pass;
        ja["fail"] = a.fail;
        ja["uncertain"] = a.uncertain;
        if (a.counterexample) {
            nlohmann::ordered_json jc;
            jc["trial"] = a.counterexample->trial;
            jc["description"] = a.counterexample->description;
            jc["inputs"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : a.counterexample->inputs) jc["inputs"][k] = v;
            ja["counterexample"] = jc;
        }
        j["axioms"].push_back(ja);
    }
    j["elapsed_ms"] = include_timing ? elapsed_ms : 0;
    return j.dump(indent) + "\n";
}

std::string Report::to_text(bool include_timing) const {
    std::ostringstream os;
    os << "suite " << suite << " (seed " << seed << ", trials " << trials << ")\n";
    for (const auto& a : axioms) {
        os << "  " << (a.fail ? "FAIL" : a.uncertain ? "UNCERTAIN" : "ok  ") << "  " << a.name << ": "
           << a.pass << " pass, " << a.fail << " fail, " << a.uncertain << " uncertain\n";
        if (a.counterexample) {
            os << "        first counterexample at trial " << a.counterexample->trial << ": "
               << a.counterexample->description << "\n";
            for (const auto& [k, v] : a.counterexample->inputs) {
                os << "          " << k << " = " << v << "\n";
            }
        }
    }
    if (include_timing) os << "  elapsed " << elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace opgeo
