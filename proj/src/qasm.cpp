#include "qmap/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gate_names.hpp"
#include "qmap/error.hpp"
#include "qmap/schedule.hpp"

namespace qmap {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_operand(const std::string& tok, int line_no) {
    if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'Q'))
        fail(line_no, "expected qubit operand like q3, got '" + tok + "'");
    for (size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            fail(line_no, "expected qubit operand like q3, got '" + tok + "'");
    return std::stoi(tok.substr(1));
}

// "cnot q0, q1" -> Gate; operand count and range checked by the caller's
// qubit count.
Gate parse_gate(const std::string& text, int line_no, int qubit_count) {
    std::istringstream in(text);
    std::string name;
    in >> name;
    name = detail::normalize_spelling(lower(name));
    auto arity = detail::fixed_arity(name);
    if (!arity) fail(line_no, "unknown gate '" + name + "'");

    std::string rest;
    std::getline(in, rest);
    std::vector<std::string> tokens;
    std::string tok;
    for (std::istringstream ops(rest); std::getline(ops, tok, ',');) {
        tok = strip(tok);
        if (tok.empty()) fail(line_no, "empty operand");
        tokens.push_back(tok);
    }
    if (static_cast<int>(tokens.size()) != *arity)
        fail(line_no, "gate '" + name + "' expects " + std::to_string(*arity) +
                          " operand(s), got " + std::to_string(tokens.size()));

    Gate gate;
    gate.name = name;
    for (const std::string& t : tokens) {
        int q = parse_operand(t, line_no);
        if (q < 0 || q >= qubit_count)
            fail(line_no, "qubit q" + std::to_string(q) + " out of range (qubits " +
                              std::to_string(qubit_count) + ")");
        gate.operands.push_back(q);
    }
    if (gate.operands.size() == 2 && gate.operands[0] == gate.operands[1])
        fail(line_no, "gate '" + name + "' operands must be distinct");
    return gate;
}

} // namespace

Circuit parse_circuit(const std::string& text, const std::string& name) {
    Circuit circuit;
    circuit.name = name;
    bool saw_header = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (!saw_header) {
            std::istringstream hdr(line);
            std::string keyword;
            hdr >> keyword;
            if (lower(keyword) != "qubits")
                fail(line_no, "expected 'qubits N' header, got '" + line + "'");
            int n = 0;
            if (!(hdr >> n) || n < 1) fail(line_no, "invalid qubit count");
            std::string extra;
            if (hdr >> extra) fail(line_no, "trailing text after qubit count");
            circuit.qubit_count = n;
            saw_header = true;
            continue;
        }

        // Bundled schedule lines re-parse: gates between { }, '-' is idle.
        if (lower(line).rfind("cycle ", 0) == 0) {
            size_t colon = line.find(':');
            if (colon == std::string::npos) fail(line_no, "malformed cycle line");
            std::string body = strip(line.substr(colon + 1));
            if (body == "-") continue;
            if (body.size() < 2 || body.front() != '{' || body.back() != '}')
                fail(line_no, "malformed cycle line");
            body = body.substr(1, body.size() - 2);
            std::string entry;
            for (std::istringstream gates(body); std::getline(gates, entry, '|');) {
                entry = strip(entry);
                if (entry.empty()) fail(line_no, "empty gate in cycle line");
                circuit.gates.push_back(parse_gate(entry, line_no, circuit.qubit_count));
            }
            continue;
        }

        circuit.gates.push_back(parse_gate(line, line_no, circuit.qubit_count));
    }
    if (!saw_header) throw ParseError("missing 'qubits N' header");
    return circuit;
}

namespace {

std::string gate_text(const Gate& gate) {
    std::string out = gate.name;
    for (size_t i = 0; i < gate.operands.size(); ++i) {
        out += i == 0 ? " q" : ", q";
        out += std::to_string(gate.operands[i]);
    }
    return out;
}

} // namespace

std::string emit_unscheduled(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
    for (const Gate& gate : circuit.gates) out += gate_text(gate) + "\n";
    return out;
}

BundledOutput bundle(const Circuit& circuit, const Schedule& schedule,
                     const std::vector<int>& vpmap) {
    BundledOutput out;
    out.latency = schedule.latency;
    out.vpmap = vpmap;
    out.cycles.assign(static_cast<size_t>(std::max<std::int64_t>(schedule.latency, 0)), {});
    for (size_t i = 0; i < circuit.gates.size(); ++i)
        out.cycles[static_cast<size_t>(schedule.start[i])].push_back(static_cast<GateId>(i));
    for (auto& ids : out.cycles) std::sort(ids.begin(), ids.end());
    return out;
}

std::string bundled_text(const Circuit& circuit, const BundledOutput& bundled) {
    std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
    for (size_t t = 0; t < bundled.cycles.size(); ++t) {
        out += "cycle " + std::to_string(t) + ": ";
        const auto& ids = bundled.cycles[t];
        if (ids.empty()) {
            out += "-\n";
            continue;
        }
        out += "{ ";
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i) out += " | ";
            out += gate_text(circuit.gates[static_cast<size_t>(ids[i])]);
        }
        out += " }\n";
    }
    out += "# latency " + std::to_string(bundled.latency) + " cycles\n";
    for (size_t v = 0; v < bundled.vpmap.size(); ++v)
        out += "# vpmap v" + std::to_string(v) + " -> p" + std::to_string(bundled.vpmap[v]) +
               "\n";
    return out;
}

} // namespace qmap
