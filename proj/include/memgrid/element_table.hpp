#ifndef MEMGRID_ELEMENT_TABLE_HPP
#define MEMGRID_ELEMENT_TABLE_HPP

/**
 * @file element_table.hpp
 * @brief Symbolic rule engine for the periodic table of fundamental passive
 *        elements: the electric and magnetic grids, the occupancy and
 *        transient rules, the exclusion arguments, and classification of
 *        candidate constitutive relations.
 *
 * Rows index the time-derivative order of charge (A: q, B: q', C: q'',
 * D: q'''). Electric columns index the response (Z: phi = integral of v dt,
 * Y: v, X: v', W: v''); magnetic columns index the true magnetic flux
 * (Zh: -phi_B, Yh: -phi_B', Xh: -phi_B'', Wh: -phi_B'''). Each column to the
 * right is the time derivative of the one on its left, so every element
 * travels along a diagonal.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace memgrid::elements {

// ============================================================================
// Grid coordinates
// ============================================================================

enum class Row { A = 0, B = 1, C = 2, D = 3 };

/// Electric columns Z, Y, X, W and their hatted magnetic mirrors.
enum class Column { Z = 0, Y, X, W, Zh, Yh, Xh, Wh };

constexpr bool is_magnetic(Column c) { return c >= Column::Zh; }

/// Derivative order of charge for a row (0..3).
constexpr int charge_order(Row r) { return static_cast<int>(r); }

/// Response order of a column mapped onto the electric scale where the
/// computed flux phi is order -1 and v is order 0. Magnetic column Zh mirrors
/// Z, Yh mirrors Y, and so on (via -phi_B' = v).
int response_order(Column c);

std::string row_name(Row r);
std::string column_name(Column c);  ///< "Z".."W", "Zh".."Wh"

// ============================================================================
// Slots
// ============================================================================

enum class SlotStatus { Fundamental, Derived, Forbidden, Empty };

enum class ForbiddenReason {
    None,
    MagneticStationaryCharge,  ///< stationary charge cannot produce a B field
    NoCapacitorMagnetism,      ///< capacitor diagonal absent from the magnetic plane
    TrivialOnly,               ///< relation satisfied only degenerately (-phi_B' = 0)
    TransientRule2,            ///< relation holds only during a transition
    ActivityRequired           ///< any occupant would need power gain
};

enum class Element { None, Capacitor, Resistor, Inductor };

struct Slot {
    Row row = Row::A;
    Column column = Column::Z;
    SlotStatus status = SlotStatus::Empty;
    Element occupant = Element::None;  ///< set for Fundamental/Derived slots;
                                       ///< also set on a Forbidden slot whose
                                       ///< conditions an element already meets
    std::string relation;              ///< governing-equation template, e.g. "R q' = v"
    ForbiddenReason reason = ForbiddenReason::None;
    std::string note;
};

/// The full 4 x 8 grid (both planes).
struct Grid {
    std::array<Slot, 32> slots{};

    const Slot& at(Row r, Column c) const;
    Slot& at(Row r, Column c);
};

/// The canonical table transcribing the published electric and magnetic
/// grids. Idempotent; matches the checked-in fixture cell for cell.
Grid canonical_table();

/// Governing-equation template of a slot by diagonal/derivative construction,
/// e.g. (C,X) -> "r q'' = v'". Empty string for slots below the capacitor
/// diagonal (no passive template exists).
std::string slot_equation(Row r, Column c);

// ============================================================================
// Candidates
// ============================================================================

enum class ResponseKind {
    Voltage,      ///< response is d^m v, m in {0,1,2}
    ComputedFlux, ///< response is phi = integral of v dt
    MagneticFlux  ///< response is -d^m phi_B, m in {0,1,2}
};

enum class CoefficientKind { LinearConstant, Nonlinear, ChargeDependent, TimeDependent };

/// Symbolic description of a candidate element.
struct ConstitutiveRelation {
    std::string name;                 ///< informational
    int charge_order = 0;             ///< 0..3: q, q', q'', q'''
    ResponseKind response = ResponseKind::Voltage;
    int response_order = 0;           ///< 0..2; ignored for ComputedFlux
    CoefficientKind coefficient = CoefficientKind::LinearConstant;
    std::string symbol = "R";         ///< phenomenological constant: C^-1, R, r, L, M, U
    bool needs_integration = false;   ///< only expressible via time integrals
    bool transient_only = false;      ///< holds only during a transition
    bool stationary_charge_with_magnetic_response = false;
    bool power_gain = false;          ///< requires multiplication/amplification

    /// Throws std::invalid_argument on internally inconsistent flags
    /// (e.g. ComputedFlux without needs_integration) or out-of-range orders.
    void validate() const;
};

// ============================================================================
// Verdicts
// ============================================================================

enum class Violation {
    Rule1,                    ///< slot already held by a fundamental element
    Rule2,                    ///< transient/time-window relation
    ColumnZIntegration,       ///< defined only through integration + initial conditions
    MagneticStationaryCharge,
    ActivityRequired
};

std::string violation_name(Violation v);

struct ViolationRecord {
    Violation kind;
    Element occupant = Element::None;  ///< set when Rule1 fires
};

/// Toggleable rule set; all checks on by default. Used for sensitivity
/// analysis of the exclusion chain.
struct RuleSet {
    bool magnetic_check = true;
    bool integration_check = true;
    bool rule1 = true;
    bool rule2 = true;
    bool activity_check = true;
    bool linearity_check = true;
};

struct Verdict {
    bool placed = false;
    Row row = Row::A;
    Column column = Column::Z;
    bool fundamental = false;  ///< placed at a fundamental slot with a linear constant
    std::vector<ViolationRecord> violations;  ///< nonempty iff rejected
    std::vector<std::string> notes;
};

/**
 * @brief Classifies a candidate constitutive relation against the canonical
 *        table.
 *
 * The target slot follows from (charge_order, response). Checks apply in a
 * fixed order: magnetic stationary-charge, column-Z integration, Rule 1
 * occupancy, Rule 2, activity, and finally the nonlinearity demotion. A
 * candidate whose symbol names the slot's incumbent family (R and r, C^-1, L)
 * is recognized as that incumbent and placed; a new phenomenological constant
 * claiming an occupied slot violates Rule 1. Deterministic and total over
 * consistent candidates.
 *
 * @throws std::invalid_argument inconsistent candidate
 */
Verdict classify(const ConstitutiveRelation& candidate, const RuleSet& rules = {});

// ============================================================================
// Rejection report
// ============================================================================

struct RejectionEntry {
    Row row;
    Column column;
    std::vector<Violation> violations;  ///< empty when the active rule set no
                                        ///< longer excludes the slot
    std::string note;
};

/// Structured reproduction of the exclusion chain: the trivially-satisfied
/// slot, the transient slot, the forbidden magnetic slot, the electric-plane
/// rejections, and the activity-required slots, plus the surviving
/// fundamental set.
struct MemristorReport {
    std::vector<RejectionEntry> entries;
    std::vector<std::pair<Element, Row>> fundamental_set;  ///< all on column Y
};

MemristorReport memristor_rejection_report(const RuleSet& rules = {});

// ============================================================================
// Serialization (consumed by the CLI)
// ============================================================================

std::string element_name(Element e);
std::string status_name(SlotStatus s);
std::string reason_name(ForbiddenReason r);

std::string to_json_string(const Grid& grid, int indent = 2);
std::string to_json_string(const Verdict& verdict, int indent = 2);
std::string to_json_string(const MemristorReport& report, int indent = 2);

std::string to_text(const Grid& grid);
std::string to_text(const Verdict& verdict);
std::string to_text(const MemristorReport& report);

/// Parses a candidate from JSON (the CLI candidate-file schema). Unknown keys
/// are rejected. Throws std::invalid_argument on malformed input.
ConstitutiveRelation candidate_from_json(const std::string& json_text);

/// Built-in candidates by name: capacitor, resistor, inductor, diode,
/// memristor-electric, memristor-magnetic, memristor-magnetic-dc,
/// memristor-magnetic-rate, memristor-nonlinear-resistor, ideal-memristor.
/// Returns nullopt for an unknown name.
std::optional<ConstitutiveRelation> builtin_candidate(const std::string& name);

}  // namespace memgrid::elements

#endif  // MEMGRID_ELEMENT_TABLE_HPP
