#include "memgrid/element_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace memgrid::elements {

using ordered_json = nlohmann::ordered_json;

// ============================================================================
// Coordinates
// ============================================================================

int response_order(Column c) {
    switch (c) {
        case Column::Z:  return -1;  // phi = integral of v dt
        case Column::Y:  return 0;   // v
        case Column::X:  return 1;   // v'
        case Column::W:  return 2;   // v''
        case Column::Zh: return -1;  // -phi_B   (mirrors Z via -phi_B' = v)
        case Column::Yh: return 0;   // -phi_B'
        case Column::Xh: return 1;   // -phi_B''
        case Column::Wh: return 2;   // -phi_B'''
    }
    throw std::invalid_argument("response_order: bad column");
}

std::string row_name(Row r) {
    static const char* names[] = {"A", "B", "C", "D"};
    return names[static_cast<int>(r)];
}

std::string column_name(Column c) {
    static const char* names[] = {"Z", "Y", "X", "W", "Zh", "Yh", "Xh", "Wh"};
    return names[static_cast<int>(c)];
}

std::string element_name(Element e) {
    switch (e) {
        case Element::None:      return "none";
        case Element::Capacitor: return "C";
        case Element::Resistor:  return "R";
        case Element::Inductor:  return "L";
    }
    return "none";
}

std::string status_name(SlotStatus s) {
    switch (s) {
        case SlotStatus::Fundamental: return "fundamental";
        case SlotStatus::Derived:     return "derived";
        case SlotStatus::Forbidden:   return "forbidden";
        case SlotStatus::Empty:       return "empty";
    }
    return "empty";
}

std::string reason_name(ForbiddenReason r) {
    switch (r) {
        case ForbiddenReason::None:                    return "none";
        case ForbiddenReason::MagneticStationaryCharge: return "magnetic_stationary_charge";
        case ForbiddenReason::NoCapacitorMagnetism:    return "no_capacitor_magnetism";
        case ForbiddenReason::TrivialOnly:             return "trivial_only";
        case ForbiddenReason::TransientRule2:          return "transient_rule2";
        case ForbiddenReason::ActivityRequired:        return "activity_required";
    }
    return "none";
}

std::string violation_name(Violation v) {
    switch (v) {
        case Violation::Rule1:                    return "Rule1";
        case Violation::Rule2:                    return "Rule2";
        case Violation::ColumnZIntegration:       return "ColumnZ_integration";
        case Violation::MagneticStationaryCharge: return "Magnetic_stationary_charge";
        case Violation::ActivityRequired:         return "Activity_required";
    }
    return "Rule1";
}

// ============================================================================
// Slot equations
// ============================================================================

namespace {

std::size_t slot_index(Row r, Column c) {
    return static_cast<std::size_t>(r) * 8 + static_cast<std::size_t>(c);
}

std::string charge_term(int order) {
    static const char* terms[] = {"q", "q'", "q''", "q'''"};
    return terms[order];
}

std::string response_term(Column c) {
    switch (c) {
        case Column::Z:  return "phi";
        case Column::Y:  return "v";
        case Column::X:  return "v'";
        case Column::W:  return "v''";
        case Column::Zh: return "-phi_B";
        case Column::Yh: return "-phi_B'";
        case Column::Xh: return "-phi_B''";
        case Column::Wh: return "-phi_B'''";
    }
    return "";
}

// Diagonal invariant: the difference between the charge order and the
// response order identifies the element family.
int diagonal_of(Row r, Column c) { return charge_order(r) - response_order(c); }

std::string diagonal_symbol(int k, Row r) {
    switch (k) {
        case 0: return "C^-1";
        case 1: return charge_order(r) == 2 ? "r" : "R";  // small-signal form at row C
        case 2: return "L";
        case 3: return "U";
        default: return "";
    }
}

}  // namespace

std::string slot_equation(Row r, Column c) {
    const int k = diagonal_of(r, c);
    const std::string symbol = diagonal_symbol(k, r);
    if (symbol.empty()) return "";
    return symbol + " " + charge_term(charge_order(r)) + " = " + response_term(c);
}

// ============================================================================
// Canonical table
// ============================================================================

const Slot& Grid::at(Row r, Column c) const { return slots[slot_index(r, c)]; }
Slot& Grid::at(Row r, Column c) { return slots[slot_index(r, c)]; }

namespace {

Grid build_canonical_table() {
    Grid grid;
    for (int ri = 0; ri < 4; ++ri) {
        for (int ci = 0; ci < 8; ++ci) {
            const Row r = static_cast<Row>(ri);
            const Column c = static_cast<Column>(ci);
            Slot& slot = grid.at(r, c);
            slot.row = r;
            slot.column = c;
            slot.status = SlotStatus::Empty;
        }
    }

    auto set = [&grid](Row r, Column c, SlotStatus status, Element occupant,
                       ForbiddenReason reason = ForbiddenReason::None,
                       std::string note = {}) {
        Slot& slot = grid.at(r, c);
        slot.status = status;
        slot.occupant = occupant;
        slot.relation = slot_equation(r, c);
        slot.reason = reason;
        slot.note = std::move(note);
    };

    // --- electric plane ---
    set(Row::A, Column::Z, SlotStatus::Derived, Element::Resistor, ForbiddenReason::None,
        "column Z relations are defined by integration and need initial conditions");
    set(Row::B, Column::Z, SlotStatus::Derived, Element::Inductor, ForbiddenReason::None,
        "column Z relations are defined by integration and need initial conditions");
    set(Row::A, Column::Y, SlotStatus::Fundamental, Element::Capacitor);
    set(Row::B, Column::Y, SlotStatus::Fundamental, Element::Resistor);
    set(Row::C, Column::Y, SlotStatus::Fundamental, Element::Inductor);
    set(Row::D, Column::Y, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::ActivityRequired,
        "an occupant would multiply two inductor currents; multiplication needs active parts");
    // (A,X) stays empty: no known element satisfies v' = K q.
    set(Row::B, Column::X, SlotStatus::Derived, Element::Capacitor);
    set(Row::C, Column::X, SlotStatus::Derived, Element::Resistor, ForbiddenReason::None,
        "small-signal form r = dv/di");
    set(Row::D, Column::X, SlotStatus::Derived, Element::Inductor);
    set(Row::C, Column::W, SlotStatus::Derived, Element::Capacitor);
    set(Row::D, Column::W, SlotStatus::Derived, Element::Resistor);

    // --- magnetic plane ---
    set(Row::A, Column::Zh, SlotStatus::Forbidden, Element::Resistor,
        ForbiddenReason::MagneticStationaryCharge,
        "stationary electric charges cannot produce a magnetic field; a resistor "
        "already satisfies the abstracted conditions");
    set(Row::B, Column::Zh, SlotStatus::Derived, Element::Inductor, ForbiddenReason::None,
        "one-way relation: constant current makes a constant field, not vice versa");
    set(Row::A, Column::Yh, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::NoCapacitorMagnetism,
        "capacitor diagonal: no magnetism for stationary charges");
    set(Row::B, Column::Yh, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::TrivialOnly,
        "satisfied only degenerately (-phi_B' = 0); a resistor meets the same "
        "trivial condition");
    set(Row::C, Column::Yh, SlotStatus::Fundamental, Element::Inductor);
    set(Row::B, Column::Xh, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::NoCapacitorMagnetism,
        "capacitor diagonal: no magnetism for stationary charges");
    set(Row::C, Column::Xh, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::TransientRule2,
        "the rate of voltage change vanishes once a resistance transition "
        "completes; a transient event does not satisfy a constitutive relation");
    set(Row::D, Column::Xh, SlotStatus::Derived, Element::Inductor);
    set(Row::C, Column::Wh, SlotStatus::Forbidden, Element::None,
        ForbiddenReason::NoCapacitorMagnetism,
        "capacitor diagonal: no magnetism for stationary charges");
    set(Row::D, Column::Wh, SlotStatus::Derived, Element::Resistor);

    return grid;
}

const Grid& canonical_table_ref() {
    static const Grid grid = build_canonical_table();
    return grid;
}

}  // namespace

Grid canonical_table() { return canonical_table_ref(); }

// ============================================================================
// Candidates
// ============================================================================

void ConstitutiveRelation::validate() const {
    if (charge_order < 0 || charge_order > 3) {
        throw std::invalid_argument("ConstitutiveRelation: charge_order must be 0..3");
    }
    if (response != ResponseKind::ComputedFlux &&
        (response_order < 0 || response_order > 2)) {
        throw std::invalid_argument("ConstitutiveRelation: response_order must be 0..2");
    }
    if (response == ResponseKind::ComputedFlux && !needs_integration) {
        throw std::invalid_argument(
            "ConstitutiveRelation: a computed-flux response implies needs_integration");
    }
    const bool stationary_magnetic =
        charge_order == 0 && response == ResponseKind::MagneticFlux;
    if (stationary_charge_with_magnetic_response != stationary_magnetic) {
        throw std::invalid_argument(
            "ConstitutiveRelation: stationary_charge_with_magnetic_response must be "
            "set exactly when charge_order is 0 and the response is magnetic");
    }
    if (symbol.empty()) {
        throw std::invalid_argument("ConstitutiveRelation: empty symbol");
    }
}

namespace {

Element symbol_family(const std::string& symbol) {
    if (symbol == "C" || symbol == "C^-1") return Element::Capacitor;
    if (symbol == "R" || symbol == "r") return Element::Resistor;
    if (symbol == "L") return Element::Inductor;
    return Element::None;
}

Column target_column(const ConstitutiveRelation& c) {
    switch (c.response) {
        case ResponseKind::ComputedFlux:
            return Column::Z;
        case ResponseKind::Voltage:
            switch (c.response_order) {
                case 0: return Column::Y;
                case 1: return Column::X;
                default: return Column::W;
            }
        case ResponseKind::MagneticFlux:
            switch (c.response_order) {
                case 0: return Column::Zh;
                case 1: return Column::Yh;
                default: return Column::Xh;
            }
    }
    throw std::invalid_argument("target_column: bad response kind");
}

void add_violation(std::vector<ViolationRecord>& list, Violation kind,
                   Element occupant = Element::None) {
    for (const ViolationRecord& rec : list) {
        if (rec.kind == kind) return;
    }
    list.push_back(ViolationRecord{kind, occupant});
}

}  // namespace

Verdict classify(const ConstitutiveRelation& candidate, const RuleSet& rules) {
    candidate.validate();

    Verdict verdict;
    verdict.row = static_cast<Row>(candidate.charge_order);
    verdict.column = target_column(candidate);
    const Slot& slot = canonical_table_ref().at(verdict.row, verdict.column);
    const Element family = symbol_family(candidate.symbol);
    const bool incumbent = slot.occupant != Element::None && family == slot.occupant;

    // 1. Magnetic stationary-charge check.
    if (rules.magnetic_check) {
        if (candidate.stationary_charge_with_magnetic_response) {
            add_violation(verdict.violations, Violation::MagneticStationaryCharge);
        }
        if (slot.status == SlotStatus::Forbidden &&
            (slot.reason == ForbiddenReason::MagneticStationaryCharge ||
             slot.reason == ForbiddenReason::NoCapacitorMagnetism)) {
            add_violation(verdict.violations, Violation::MagneticStationaryCharge);
        }
    }

    // 2. Column-Z integration check: an integral relation is not a fundamental
    //    definition. The incumbent keeps its derived slot; a new element claim
    //    is a violation.
    if (rules.integration_check && candidate.response == ResponseKind::ComputedFlux) {
        if (incumbent) {
            verdict.notes.push_back(
                "integral relation needs initial conditions; derived, not fundamental");
        } else {
            add_violation(verdict.violations, Violation::ColumnZIntegration);
        }
    }

    // 3. Rule 1: only one element per slot. A symbol naming the incumbent
    //    family is recognized as that incumbent.
    if (rules.rule1 && slot.occupant != Element::None && !incumbent) {
        add_violation(verdict.violations, Violation::Rule1, slot.occupant);
    }

    // 4. Rule 2: transient events and time-window constants do not satisfy a
    //    constitutive relation.
    if (rules.rule2) {
        const bool time_window =
            candidate.needs_integration &&
            (candidate.coefficient == CoefficientKind::ChargeDependent ||
             candidate.coefficient == CoefficientKind::TimeDependent);
        if (candidate.transient_only || time_window) {
            add_violation(verdict.violations, Violation::Rule2);
        }
        if (slot.status == SlotStatus::Forbidden &&
            (slot.reason == ForbiddenReason::TransientRule2 ||
             slot.reason == ForbiddenReason::TrivialOnly)) {
            add_violation(verdict.violations, Violation::Rule2);
            if (slot.reason == ForbiddenReason::TrivialOnly) {
                verdict.notes.push_back(slot.note);
            }
        }
    }

    // 5. Activity check: power gain disqualifies a passive element.
    if (rules.activity_check) {
        if (candidate.power_gain) {
            add_violation(verdict.violations, Violation::ActivityRequired);
        }
        if (slot.status == SlotStatus::Forbidden &&
            slot.reason == ForbiddenReason::ActivityRequired) {
            add_violation(verdict.violations, Violation::ActivityRequired);
        }
    }

    // 6. Nonlinearity demotion: placeable, but not fundamental.
    bool linear = candidate.coefficient == CoefficientKind::LinearConstant;
    if (rules.linearity_check && !linear) {
        verdict.notes.push_back(
            "nonlinear coefficient: representable by piecewise linear parts, "
            "not fundamental");
    }

    verdict.placed = verdict.violations.empty();
    verdict.fundamental =
        verdict.placed && linear && slot.status == SlotStatus::Fundamental && incumbent;
    if (verdict.placed && !verdict.fundamental && slot.status == SlotStatus::Derived) {
        verdict.notes.push_back("derived slot: a derivative/integral form of the " +
                                element_name(slot.occupant) + " relation");
    }
    return verdict;
}

// ============================================================================
// Rejection report
// ============================================================================

MemristorReport memristor_rejection_report(const RuleSet& rules) {
    static const char* chain[] = {
        "memristor-electric",           // (A,Z)
        "memristor-magnetic",           // (A,Zh)
        "memristor-magnetic-dc",        // (B,Yh)
        "memristor-magnetic-rate",      // (C,Xh)
        "memristor-nonlinear-resistor", // (C,X)
        "ideal-memristor",              // (D,Y)
    };
    static const char* chain_notes[] = {
        "phi = M q can only be evaluated by integration and the slot is held by R",
        "a stationary charge cannot source a magnetic flux; R already satisfies the "
        "abstracted relation",
        "a constant current makes a constant field: the relation holds only "
        "degenerately (-phi_B' = 0), which a resistor also satisfies",
        "the voltage rate vanishes once the resistance transition completes",
        "hysteresis in the current-voltage plane is an active phenomenon",
        "i proportional to t^2 needs multiplication, hence active parts",
    };

    MemristorReport report;
    for (std::size_t k = 0; k < std::size(chain); ++k) {
        const ConstitutiveRelation candidate = *builtin_candidate(chain[k]);
        const Verdict verdict = classify(candidate, rules);
        RejectionEntry entry;
        entry.row = verdict.row;
        entry.column = verdict.column;
        for (const ViolationRecord& rec : verdict.violations) {
            entry.violations.push_back(rec.kind);
        }
        entry.note = chain_notes[k];
        report.entries.push_back(std::move(entry));
    }

    const Grid& grid = canonical_table_ref();
    for (int ri = 0; ri < 4; ++ri) {
        const Slot& slot = grid.at(static_cast<Row>(ri), Column::Y);
        if (slot.status == SlotStatus::Fundamental) {
            report.fundamental_set.emplace_back(slot.occupant, slot.row);
        }
    }
    return report;
}

// ============================================================================
// Built-in candidates
// ============================================================================

std::optional<ConstitutiveRelation> builtin_candidate(const std::string& name) {
    ConstitutiveRelation c;
    c.name = name;
    if (name == "capacitor") {
        c.charge_order = 0;
        c.symbol = "C^-1";
        return c;
    }
    if (name == "resistor") {
        c.charge_order = 1;
        c.symbol = "R";
        return c;
    }
    if (name == "inductor") {
        c.charge_order = 2;
        c.symbol = "L";
        return c;
    }
    if (name == "diode") {
        c.charge_order = 2;
        c.response_order = 1;
        c.coefficient = CoefficientKind::Nonlinear;
        c.symbol = "r";
        return c;
    }
    if (name == "memristor-electric") {
        c.charge_order = 0;
        c.response = ResponseKind::ComputedFlux;
        c.coefficient = CoefficientKind::ChargeDependent;
        c.symbol = "M";
        c.needs_integration = true;
        return c;
    }
    if (name == "memristor-magnetic") {
        c.charge_order = 0;
        c.response = ResponseKind::MagneticFlux;
        c.response_order = 0;
        c.coefficient = CoefficientKind::ChargeDependent;
        c.symbol = "M";
        c.stationary_charge_with_magnetic_response = true;
        return c;
    }
    if (name == "memristor-magnetic-dc") {
        c.charge_order = 1;
        c.response = ResponseKind::MagneticFlux;
        c.response_order = 1;
        c.coefficient = CoefficientKind::ChargeDependent;
        c.symbol = "M";
        return c;
    }
    if (name == "memristor-magnetic-rate") {
        c.charge_order = 2;
        c.response = ResponseKind::MagneticFlux;
        c.response_order = 2;
        c.coefficient = CoefficientKind::ChargeDependent;
        c.symbol = "M";
        c.transient_only = true;
        return c;
    }
    if (name == "memristor-nonlinear-resistor") {
        c.charge_order = 2;
        c.response_order = 1;
        c.coefficient = CoefficientKind::Nonlinear;
        c.symbol = "r";
        c.power_gain = true;  // flux-dependent hysteresis
        return c;
    }
    if (name == "ideal-memristor") {
        c.charge_order = 3;
        c.symbol = "U";
        c.power_gain = true;  // square-law current growth needs multiplication
        return c;
    }
    return std::nullopt;
}

// ============================================================================
// Serialization
// ============================================================================

namespace {

ordered_json slot_to_json(const Slot& slot) {
    ordered_json j;
    j["row"] = row_name(slot.row);
    j["column"] = column_name(slot.column);
    j["status"] = status_name(slot.status);
    j["occupant"] = element_name(slot.occupant);
    j["relation"] = slot.relation;
    j["reason"] = reason_name(slot.reason);
    j["note"] = slot.note;
    return j;
}

ordered_json verdict_to_json(const Verdict& verdict) {
    ordered_json j;
    j["outcome"] = verdict.placed ? "placed" : "rejected";
    j["row"] = row_name(verdict.row);
    j["column"] = column_name(verdict.column);
    j["fundamental"] = verdict.fundamental;
    ordered_json violations = ordered_json::array();
    for (const ViolationRecord& rec : verdict.violations) {
        ordered_json v;
        v["kind"] = violation_name(rec.kind);
        if (rec.kind == Violation::Rule1) v["occupant"] = element_name(rec.occupant);
        violations.push_back(v);
    }
    j["violations"] = violations;
    j["notes"] = verdict.notes;
    return j;
}

}  // namespace

std::string to_json_string(const Grid& grid, int indent) {
    ordered_json j;
    ordered_json slots = ordered_json::array();
    for (const Slot& slot : grid.slots) slots.push_back(slot_to_json(slot));
    j["slots"] = slots;
    return j.dump(indent);
}

std::string to_json_string(const Verdict& verdict, int indent) {
    return verdict_to_json(verdict).dump(indent);
}

std::string to_json_string(const MemristorReport& report, int indent) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (const RejectionEntry& entry : report.entries) {
        ordered_json e;
        e["row"] = row_name(entry.row);
        e["column"] = column_name(entry.column);
        ordered_json kinds = ordered_json::array();
        for (Violation v : entry.violations) kinds.push_back(violation_name(v));
        e["violations"] = kinds;
        e["note"] = entry.note;
        entries.push_back(e);
    }
    j["entries"] = entries;
    ordered_json fundamentals = ordered_json::array();
    for (const auto& [element, row] : report.fundamental_set) {
        ordered_json f;
        f["element"] = element_name(element);
        f["row"] = row_name(row);
        f["column"] = "Y";
        fundamentals.push_back(f);
    }
    j["fundamental_set"] = fundamentals;
    return j.dump(indent);
}

std::string to_text(const Grid& grid) {
    std::ostringstream out;
    static const Column order[] = {Column::Wh, Column::Xh, Column::Yh, Column::Zh,
                                   Column::Z,  Column::Y,  Column::X,  Column::W};
    out << "rows: charge order (A: q .. D: q'''); columns: magnetic plane "
           "(Wh..Zh), electric plane (Z..W)\n";
    for (int ri = 3; ri >= 0; --ri) {
        const Row r = static_cast<Row>(ri);
        out << row_name(r) << ":\n";
        for (Column c : order) {
            const Slot& slot = grid.at(r, c);
            out << "  (" << row_name(r) << "," << column_name(c) << ") "
                << status_name(slot.status);
            if (slot.occupant != Element::None) out << " [" << element_name(slot.occupant) << "]";
            if (!slot.relation.empty()) out << "  " << slot.relation;
            if (slot.reason != ForbiddenReason::None) out << "  (" << reason_name(slot.reason) << ")";
            out << "\n";
        }
    }
    return out.str();
}

std::string to_text(const Verdict& verdict) {
    std::ostringstream out;
    if (verdict.placed) {
        out << "placed at (" << row_name(verdict.row) << "," << column_name(verdict.column)
            << ")" << (verdict.fundamental ? ", fundamental" : ", not fundamental") << "\n";
    } else {
        out << "rejected at (" << row_name(verdict.row) << "," << column_name(verdict.column)
            << ")\n";
        for (const ViolationRecord& rec : verdict.violations) {
            out << "  violates " << violation_name(rec.kind);
            if (rec.kind == Violation::Rule1) {
                out << " (slot held by " << element_name(rec.occupant) << ")";
            }
            out << "\n";
        }
    }
    for (const std::string& note : verdict.notes) out << "  note: " << note << "\n";
    return out.str();
}

std::string to_text(const MemristorReport& report) {
    std::ostringstream out;
    out << "memristor exclusion chain:\n";
    for (const RejectionEntry& entry : report.entries) {
        out << "  (" << row_name(entry.row) << "," << column_name(entry.column) << "): ";
        if (entry.violations.empty()) {
            out << "no violation under the active rule set";
        } else {
            for (std::size_t k = 0; k < entry.violations.size(); ++k) {
                if (k) out << ", ";
                out << violation_name(entry.violations[k]);
            }
        }
        out << "\n      " << entry.note << "\n";
    }
    out << "fundamental set:";
    for (const auto& [element, row] : report.fundamental_set) {
        out << " " << element_name(element) << "@(" << row_name(row) << ",Y)";
    }
    out << "\n";
    return out.str();
}

// ============================================================================
// Candidate JSON parsing
// ============================================================================

namespace {

ResponseKind parse_response(const std::string& s) {
    if (s == "voltage") return ResponseKind::Voltage;
    if (s == "computed_flux") return ResponseKind::ComputedFlux;
    if (s == "magnetic_flux") return ResponseKind::MagneticFlux;
    throw std::invalid_argument("candidate: unknown response kind '" + s + "'");
}

CoefficientKind parse_coefficient(const std::string& s) {
    if (s == "linear_constant") return CoefficientKind::LinearConstant;
    if (s == "nonlinear") return CoefficientKind::Nonlinear;
    if (s == "charge_dependent") return CoefficientKind::ChargeDependent;
    if (s == "time_dependent") return CoefficientKind::TimeDependent;
    throw std::invalid_argument("candidate: unknown coefficient kind '" + s + "'");
}

}  // namespace

ConstitutiveRelation candidate_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("candidate: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("candidate: expected a JSON object");

    static const char* known[] = {"name",
                                  "charge_order",
                                  "response",
                                  "response_order",
                                  "coefficient",
                                  "symbol",
                                  "needs_integration",
                                  "transient_only",
                                  "stationary_charge_with_magnetic_response",
                                  "power_gain"};
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(std::begin(known), std::end(known), [&key](const char* k) {
                return key == k;
            }) == std::end(known)) {
            throw std::invalid_argument("candidate: unknown key '" + key + "'");
        }
    }

    ConstitutiveRelation c;
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    c.charge_order = j.at("charge_order").get<int>();
    c.response = parse_response(j.at("response").get<std::string>());
    if (j.contains("response_order")) c.response_order = j.at("response_order").get<int>();
    if (j.contains("coefficient")) {
        c.coefficient = parse_coefficient(j.at("coefficient").get<std::string>());
    }
    c.symbol = j.at("symbol").get<std::string>();
    if (j.contains("needs_integration")) {
        c.needs_integration = j.at("needs_integration").get<bool>();
    }
    if (j.contains("transient_only")) c.transient_only = j.at("transient_only").get<bool>();
    if (j.contains("stationary_charge_with_magnetic_response")) {
        c.stationary_charge_with_magnetic_response =
            j.at("stationary_charge_with_magnetic_response").get<bool>();
    }
    if (j.contains("power_gain")) c.power_gain = j.at("power_gain").get<bool>();
    c.validate();
    return c;
}

}  // namespace memgrid::elements
