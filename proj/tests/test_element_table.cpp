#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "memgrid/element_table.hpp"

using namespace memgrid::elements;

namespace {

nlohmann::json load_fixture() {
    const std::string path = std::string(MEMGRID_TEST_DATA_DIR) + "/canonical_table.json";
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

bool has_violation(const Verdict& verdict, Violation kind) {
    for (const ViolationRecord& rec : verdict.violations) {
        if (rec.kind == kind) return true;
    }
    return false;
}

Element rule1_occupant(const Verdict& verdict) {
    for (const ViolationRecord& rec : verdict.violations) {
        if (rec.kind == Violation::Rule1) return rec.occupant;
    }
    return Element::None;
}

}  // namespace

TEST_CASE("canonical table matches the checked-in transcription cell for cell") {
    const Grid grid = canonical_table();
    const nlohmann::json fixture = load_fixture();
    REQUIRE(fixture.at("slots").size() == 32);

    for (const auto& cell : fixture.at("slots")) {
        const std::string row_label = cell.at("row");
        const std::string col_label = cell.at("column");
        // locate the slot by its printed names
        const Slot* found = nullptr;
        for (const Slot& slot : grid.slots) {
            if (row_name(slot.row) == row_label && column_name(slot.column) == col_label) {
                found = &slot;
                break;
            }
        }
        REQUIRE_MESSAGE(found != nullptr, "missing slot (" << row_label << "," << col_label << ")");
        INFO("slot (" << row_label << "," << col_label << ")");
        CHECK(status_name(found->status) == cell.at("status").get<std::string>());
        CHECK(element_name(found->occupant) == cell.at("occupant").get<std::string>());
        CHECK(found->relation == cell.at("relation").get<std::string>());
        CHECK(reason_name(found->reason) == cell.at("reason").get<std::string>());
    }
}

TEST_CASE("canonical table is idempotent") {
    const Grid a = canonical_table();
    const Grid b = canonical_table();
    for (std::size_t k = 0; k < a.slots.size(); ++k) {
        CHECK(a.slots[k].status == b.slots[k].status);
        CHECK(a.slots[k].occupant == b.slots[k].occupant);
        CHECK(a.slots[k].relation == b.slots[k].relation);
    }
    CHECK(to_json_string(a) == to_json_string(b));
}

TEST_CASE("slot equations by diagonal construction") {
    CHECK(slot_equation(Row::C, Column::X) == "r q'' = v'");
    CHECK(slot_equation(Row::B, Column::Z) == "L q' = phi");
    CHECK(slot_equation(Row::D, Column::Y) == "U q''' = v");
    CHECK(slot_equation(Row::A, Column::Y) == "C^-1 q = v");
    CHECK(slot_equation(Row::B, Column::Y) == "R q' = v");
    CHECK(slot_equation(Row::C, Column::Yh) == "L q'' = -phi_B'");
    CHECK(slot_equation(Row::A, Column::X) == "");  // below the capacitor diagonal
}

TEST_CASE("each fundamental element runs along one diagonal") {
    const Grid grid = canonical_table();
    struct Run {
        Element element;
        Row rows[3];
        Column cols[3];
        int count;
    };
    const Run runs[] = {
        {Element::Capacitor, {Row::A, Row::B, Row::C}, {Column::Y, Column::X, Column::W}, 3},
        {Element::Resistor, {Row::A, Row::B, Row::C}, {Column::Z, Column::Y, Column::X}, 3},
        {Element::Inductor, {Row::B, Row::C, Row::D}, {Column::Z, Column::Y, Column::X}, 3},
    };
    for (const Run& r : runs) {
        for (int k = 0; k < r.count; ++k) {
            CHECK(grid.at(r.rows[k], r.cols[k]).occupant == r.element);
        }
        // moving one step down the diagonal differentiates both sides once
        for (int k = 0; k + 1 < r.count; ++k) {
            CHECK(charge_order(r.rows[k + 1]) == charge_order(r.rows[k]) + 1);
            CHECK(response_order(r.cols[k + 1]) == response_order(r.cols[k]) + 1);
        }
    }
}

TEST_CASE("rule 1: at most one element family per slot") {
    const Grid grid = canonical_table();
    for (const Slot& slot : grid.slots) {
        if (slot.status == SlotStatus::Fundamental) {
            CHECK(slot.occupant != Element::None);
        }
        if (slot.status == SlotStatus::Empty) {
            CHECK(slot.occupant == Element::None);
        }
    }
}

TEST_CASE("classify: the three fundamental elements land on column Y") {
    const Verdict cap = classify(*builtin_candidate("capacitor"));
    CHECK(cap.placed);
    CHECK(cap.fundamental);
    CHECK(cap.row == Row::A);
    CHECK(cap.column == Column::Y);

    const Verdict res = classify(*builtin_candidate("resistor"));
    CHECK(res.placed);
    CHECK(res.fundamental);
    CHECK(res.row == Row::B);
    CHECK(res.column == Column::Y);

    const Verdict ind = classify(*builtin_candidate("inductor"));
    CHECK(ind.placed);
    CHECK(ind.fundamental);
    CHECK(ind.row == Row::C);
    CHECK(ind.column == Column::Y);
}

TEST_CASE("classify: electric memristor is rejected on three grounds") {
    const Verdict verdict = classify(*builtin_candidate("memristor-electric"));
    CHECK_FALSE(verdict.placed);
    CHECK(verdict.row == Row::A);
    CHECK(verdict.column == Column::Z);
    CHECK(verdict.violations.size() == 3);
    CHECK(has_violation(verdict, Violation::ColumnZIntegration));
    CHECK(has_violation(verdict, Violation::Rule1));
    CHECK(has_violation(verdict, Violation::Rule2));
    CHECK(rule1_occupant(verdict) == Element::Resistor);
}

TEST_CASE("classify: magnetic memristor fails the stationary-charge test") {
    const Verdict verdict = classify(*builtin_candidate("memristor-magnetic"));
    CHECK_FALSE(verdict.placed);
    CHECK(verdict.row == Row::A);
    CHECK(verdict.column == Column::Zh);
    CHECK(verdict.violations.size() == 2);
    CHECK(has_violation(verdict, Violation::MagneticStationaryCharge));
    CHECK(has_violation(verdict, Violation::Rule1));
    CHECK(rule1_occupant(verdict) == Element::Resistor);
}

TEST_CASE("classify: remaining exclusion-chain slots") {
    const Verdict dc = classify(*builtin_candidate("memristor-magnetic-dc"));
    CHECK_FALSE(dc.placed);
    CHECK(dc.row == Row::B);
    CHECK(dc.column == Column::Yh);
    CHECK(dc.violations.size() == 1);
    CHECK(has_violation(dc, Violation::Rule2));

    const Verdict rate = classify(*builtin_candidate("memristor-magnetic-rate"));
    CHECK_FALSE(rate.placed);
    CHECK(rate.row == Row::C);
    CHECK(rate.column == Column::Xh);
    CHECK(rate.violations.size() == 1);
    CHECK(has_violation(rate, Violation::Rule2));

    const Verdict nonlinear = classify(*builtin_candidate("memristor-nonlinear-resistor"));
    CHECK_FALSE(nonlinear.placed);
    CHECK(nonlinear.row == Row::C);
    CHECK(nonlinear.column == Column::X);
    CHECK(nonlinear.violations.size() == 1);
    CHECK(has_violation(nonlinear, Violation::ActivityRequired));

    const Verdict ideal = classify(*builtin_candidate("ideal-memristor"));
    CHECK_FALSE(ideal.placed);
    CHECK(ideal.row == Row::D);
    CHECK(ideal.column == Column::Y);
    CHECK(has_violation(ideal, Violation::ActivityRequired));
}

TEST_CASE("classify: diode places as a nonlinear, non-fundamental resistor form") {
    const Verdict verdict = classify(*builtin_candidate("diode"));
    CHECK(verdict.placed);
    CHECK_FALSE(verdict.fundamental);
    CHECK(verdict.row == Row::C);
    CHECK(verdict.column == Column::X);
    CHECK(verdict.violations.empty());
}

TEST_CASE("classify: never places a new element into an occupied slot") {
    // A hypothetical new linear element claiming the resistor's slot.
    ConstitutiveRelation usurper;
    usurper.charge_order = 1;
    usurper.symbol = "Q";
    const Verdict verdict = classify(usurper);
    CHECK_FALSE(verdict.placed);
    CHECK(has_violation(verdict, Violation::Rule1));
    CHECK(rule1_occupant(verdict) == Element::Resistor);
}

TEST_CASE("classify is deterministic and total over consistent candidates") {
    for (int order = 0; order <= 3; ++order) {
        for (int kind = 0; kind < 3; ++kind) {
            for (int resp = 0; resp <= 2; ++resp) {
                ConstitutiveRelation c;
                c.charge_order = order;
                c.response = static_cast<ResponseKind>(kind);
                c.response_order = resp;
                c.symbol = "K";
                c.needs_integration = c.response == ResponseKind::ComputedFlux;
                c.stationary_charge_with_magnetic_response =
                    order == 0 && c.response == ResponseKind::MagneticFlux;
                const Verdict first = classify(c);
                const Verdict second = classify(c);
                CHECK(first.placed == second.placed);
                CHECK(first.violations.size() == second.violations.size());
            }
        }
    }
}

TEST_CASE("candidate flag consistency is enforced") {
    ConstitutiveRelation c;
    c.charge_order = 0;
    c.response = ResponseKind::ComputedFlux;
    c.needs_integration = false;  // inconsistent
    c.symbol = "M";
    CHECK_THROWS_AS(classify(c), std::invalid_argument);

    ConstitutiveRelation d;
    d.charge_order = 2;
    d.response = ResponseKind::Voltage;
    d.stationary_charge_with_magnetic_response = true;  // inconsistent
    d.symbol = "M";
    CHECK_THROWS_AS(classify(d), std::invalid_argument);

    ConstitutiveRelation e;
    e.charge_order = 5;  // out of range
    e.symbol = "M";
    CHECK_THROWS_AS(classify(e), std::invalid_argument);
}

TEST_CASE("memristor rejection report covers the published chain") {
    const MemristorReport report = memristor_rejection_report();
    REQUIRE(report.entries.size() == 6);

    std::set<std::pair<std::string, std::string>> slots;
    for (const RejectionEntry& entry : report.entries) {
        slots.insert({row_name(entry.row), column_name(entry.column)});
        CHECK_FALSE(entry.violations.empty());
    }
    const std::set<std::pair<std::string, std::string>> expected = {
        {"A", "Z"}, {"A", "Zh"}, {"B", "Yh"}, {"C", "Xh"}, {"C", "X"}, {"D", "Y"}};
    CHECK(slots == expected);

    REQUIRE(report.fundamental_set.size() == 3);
    CHECK(report.fundamental_set[0] == std::pair{Element::Capacitor, Row::A});
    CHECK(report.fundamental_set[1] == std::pair{Element::Resistor, Row::B});
    CHECK(report.fundamental_set[2] == std::pair{Element::Inductor, Row::C});
}

TEST_CASE("disabling rule 2 changes the transient-slot verdict") {
    RuleSet no_rule2;
    no_rule2.rule2 = false;

    const Verdict with_rule = classify(*builtin_candidate("memristor-magnetic-rate"));
    CHECK_FALSE(with_rule.placed);

    const Verdict without_rule = classify(*builtin_candidate("memristor-magnetic-rate"), no_rule2);
    CHECK(without_rule.placed);  // nothing else excludes (C,Xh)

    const MemristorReport report = memristor_rejection_report(no_rule2);
    for (const RejectionEntry& entry : report.entries) {
        if (row_name(entry.row) == "C" && column_name(entry.column) == "Xh") {
            CHECK(entry.violations.empty());
        }
    }
}

TEST_CASE("candidate JSON parsing") {
    const ConstitutiveRelation c = candidate_from_json(R"({
        "name": "test",
        "charge_order": 0,
        "response": "computed_flux",
        "coefficient": "charge_dependent",
        "symbol": "M",
        "needs_integration": true
    })");
    CHECK(c.charge_order == 0);
    CHECK(c.response == ResponseKind::ComputedFlux);
    CHECK(c.coefficient == CoefficientKind::ChargeDependent);
    CHECK(c.symbol == "M");

    CHECK_THROWS_AS(candidate_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(candidate_from_json(R"({"charge_order": 1, "response": "voltage",
        "symbol": "R", "bogus_key": 1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(candidate_from_json(R"({"charge_order": 1, "response": "sideways",
        "symbol": "R"})"),
                    std::invalid_argument);
}

TEST_CASE("serialization emits both text and JSON") {
    const Grid grid = canonical_table();
    const std::string text = to_text(grid);
    CHECK(text.find("(B,Y) fundamental [R]") != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(to_json_string(grid));
    CHECK(j.at("slots").size() == 32);

    const std::string report_text = to_text(memristor_rejection_report());
    CHECK(report_text.find("fundamental set: C@(A,Y) R@(B,Y) L@(C,Y)") != std::string::npos);

    const nlohmann::json verdict =
        nlohmann::json::parse(to_json_string(classify(*builtin_candidate("memristor-electric"))));
    CHECK(verdict.at("outcome") == "rejected");
    CHECK(verdict.at("violations").size() == 3);
}
