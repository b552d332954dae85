#include "qmorph/qasm.hpp"

#include "qmorph/errors.hpp"

#include <map>
#include <sstream>

namespace qmorph {

namespace {

uint32_t work_qubits_needed(const Circuit& circuit) {
    uint32_t needed = 0;
    for (const Gate& g : circuit.gates)
        if (g.kind == GateKind::MultiControlledNot && g.controls.size() >= 3)
            needed = std::max<uint32_t>(needed, static_cast<uint32_t>(g.controls.size()) - 2);
    return needed;
}

struct Emitter {
    std::ostringstream out;

    std::string q(uint32_t i) { return "q[" + std::to_string(i) + "]"; }
    std::string w(uint32_t i) { return "w[" + std::to_string(i) + "]"; }

    void x(const std::string& t) { out << "x " << t << ";\n"; }
    void cx(const std::string& c, const std::string& t) { out << "cx " << c << "," << t << ";\n"; }
    void ccx(const std::string& a, const std::string& b, const std::string& t) {
        out << "ccx " << a << "," << b << "," << t << ";\n";
    }

    // Clean-ancilla Toffoli ladder: 2k-3 ccx gates, work restored to zero.
    void mcx(const Gate& g) {
        const auto& cs = g.controls;
        const std::string target = q(g.a);
        for (const ControlBit& cb : cs)
            if (cb.negated) x(q(cb.qubit));
        const std::size_t k = cs.size();
        if (k == 0) {
            x(target);
        } else if (k == 1) {
            cx(q(cs[0].qubit), target);
        } else if (k == 2) {
            ccx(q(cs[0].qubit), q(cs[1].qubit), target);
        } else {
            ccx(q(cs[0].qubit), q(cs[1].qubit), w(0));
            for (std::size_t i = 2; i + 1 < k; ++i) ccx(q(cs[i].qubit), w(i - 2), w(i - 1));
            ccx(q(cs[k - 1].qubit), w(k - 3), target);
            for (std::size_t i = k - 1; i-- > 2;) ccx(q(cs[i].qubit), w(i - 2), w(i - 1));
            ccx(q(cs[0].qubit), q(cs[1].qubit), w(0));
        }
        for (const ControlBit& cb : cs)
            if (cb.negated) x(q(cb.qubit));
    }
};

} // namespace

std::string export_qasm(const Circuit& circuit, const std::vector<uint32_t>& measured) {
    const uint32_t work = work_qubits_needed(circuit);
    Emitter e;
    e.out << "OPENQASM 2.0;\n";
    e.out << "include \"qelib1.inc\";\n";
    e.out << "qreg q[" << circuit.layout.total_qubits() << "];\n";
    if (work > 0) e.out << "qreg w[" << work << "];\n";
    if (!measured.empty()) e.out << "creg c[" << measured.size() << "];\n";
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
        case GateKind::Not: e.x(e.q(g.a)); break;
        case GateKind::ControlledNot: e.cx(e.q(g.a), e.q(g.b)); break;
        case GateKind::Toffoli: e.ccx(e.q(g.a), e.q(g.b), e.q(g.c)); break;
        case GateKind::MultiControlledNot: e.mcx(g); break;
        case GateKind::ControlledSwap:
            e.out << "cswap " << e.q(g.a) << "," << e.q(g.b) << "," << e.q(g.c) << ";\n";
            break;
        case GateKind::Reset: e.out << "reset " << e.q(g.a) << ";\n"; break;
        }
    }
    for (std::size_t i = 0; i < measured.size(); ++i)
        e.out << "measure " << e.q(measured[i]) << " -> c[" << i << "];\n";
    return e.out.str();
}

namespace {

struct Parser {
    std::istringstream in;
    std::map<std::string, std::pair<uint32_t, uint32_t>> qregs; // name -> (offset, size)
    uint32_t total = 0;

    explicit Parser(const std::string& text) : in(text) {}

    static std::string strip(std::string s) {
        const auto comment = s.find("//");
        if (comment != std::string::npos) s.erase(comment);
        const auto first = s.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) return "";
        const auto last = s.find_last_not_of(" \t\r\n");
        return s.substr(first, last - first + 1);
    }

    uint32_t resolve(const std::string& operand) const {
        const auto open = operand.find('[');
        const auto close = operand.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw QasmParseError("bad operand '" + operand + "'");
        const std::string name = operand.substr(0, open);
        const uint32_t index =
            static_cast<uint32_t>(std::stoul(operand.substr(open + 1, close - open - 1)));
        const auto it = qregs.find(name);
        if (it == qregs.end()) throw QasmParseError("unknown register '" + name + "'");
        if (index >= it->second.second)
            throw QasmParseError("index out of range in '" + operand + "'");
        return it->second.first + index;
    }

    static std::vector<std::string> split_operands(const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                parts.push_back(strip(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!strip(cur).empty()) parts.push_back(strip(cur));
        return parts;
    }
};

} // namespace

ParsedQasm parse_qasm(const std::string& text) {
    Parser p(text);
    ParsedQasm result;
    std::string raw;
    bool saw_header = false;
    while (std::getline(p.in, raw, ';')) {
        const std::string stmt = Parser::strip(raw);
        if (stmt.empty()) continue;
        const auto space = stmt.find_first_of(" \t");
        const std::string head = (space == std::string::npos) ? stmt : stmt.substr(0, space);
        const std::string rest =
            (space == std::string::npos) ? "" : Parser::strip(stmt.substr(space + 1));

        if (head == "OPENQASM") {
            saw_header = true;
        } else if (head == "include" || head == "creg" || head == "barrier") {
            // no effect on the gate list
        } else if (head == "qreg") {
            const auto open = rest.find('[');
            const auto close = rest.find(']');
            if (open == std::string::npos || close == std::string::npos)
                throw QasmParseError("bad qreg '" + rest + "'");
            const std::string name = rest.substr(0, open);
            const uint32_t size =
                static_cast<uint32_t>(std::stoul(rest.substr(open + 1, close - open - 1)));
            p.qregs[name] = {p.total, size};
            p.total += size;
        } else if (head == "x" || head == "reset") {
            const uint32_t t = p.resolve(rest);
            result.gates.push_back(head == "x" ? Gate::x(t) : Gate::reset(t));
        } else if (head == "cx" || head == "ccx" || head == "cswap") {
            const auto ops = Parser::split_operands(rest);
            if (head == "cx") {
                if (ops.size() != 2) throw QasmParseError("cx expects 2 operands");
                result.gates.push_back(Gate::cx(p.resolve(ops[0]), p.resolve(ops[1])));
            } else if (head == "ccx") {
                if (ops.size() != 3) throw QasmParseError("ccx expects 3 operands");
                result.gates.push_back(
                    Gate::ccx(p.resolve(ops[0]), p.resolve(ops[1]), p.resolve(ops[2])));
            } else {
                if (ops.size() != 3) throw QasmParseError("cswap expects 3 operands");
                result.gates.push_back(
                    Gate::cswap(p.resolve(ops[0]), p.resolve(ops[1]), p.resolve(ops[2])));
            }
        } else if (head == "measure") {
            const auto arrow = rest.find("->");
            if (arrow == std::string::npos) throw QasmParseError("measure without ->");
            result.measured.push_back(p.resolve(Parser::strip(rest.substr(0, arrow))));
        } else {
            throw QasmParseError("unsupported statement '" + head + "'");
        }
    }
    if (!saw_header) throw QasmParseError("missing OPENQASM header");
    result.qubits = p.total;
    return result;
}

} // namespace qmorph
