#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridflow/errors.hpp"
#include "gridflow/matrix.hpp"

namespace gridflow {

enum class BusKind { Slack, PV, PQ };

struct Bus {
  int id = 0;  // external label from the case file
  BusKind kind = BusKind::PQ;
  double pd_mw = 0.0;
  double qd_mvar = 0.0;
  double gs_mw = 0.0;    // shunt conductance, MW at V = 1 p.u.
  double bs_mvar = 0.0;  // shunt susceptance, MVAr at V = 1 p.u.
  double area = 1.0;
  double vm = 1.0;
  double va_rad = 0.0;
  double base_kv = 0.0;
  double zone = 1.0;
  double vmax = 1.1;
  double vmin = 0.9;
};

/// One generator bus; parallel units are aggregated at parse time.
struct Gen {
  int bus = 0;  // internal index
  double pg_mw = 0.0;
  double qg_mvar = 0.0;
  double qmax_mvar = 0.0;
  double qmin_mvar = 0.0;
  double vg = 1.0;
};

struct Branch {
  int from = 0;  // internal indices
  int to = 0;
  double r = 0.0;
  double x = 0.0;
  double b_c = 0.0;      // total line-charging susceptance, p.u.
  double rate_a = 0.0;   // MVA limit, 0 = unlimited
  double rate_b = 0.0;
  double rate_c = 0.0;
  double tap = 1.0;      // off-nominal ratio, 1.0 when the file stores 0
  double shift_rad = 0.0;
  bool in_service = true;
};

/// How the charging-free, shunt-free susceptance matrix treats series
/// resistance: keep it (susceptance of the full series impedance) or drop it
/// (pure 1/x).
enum class BprimeStyle { SeriesImpedance, ReactanceOnly };

struct Network {
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Gen> gens;
  std::vector<Branch> branches;

  ComplexMatrix ybus;
  Matrix bprime;

  int slack = -1;       // internal index
  std::vector<int> pv;  // ascending internal indices
  std::vector<int> pq;

  int size() const { return static_cast<int>(buses.size()); }
  /// Number of unknown phasor entries: 2N - Ng - 2.
  int unknown_count() const {
    return 2 * size() - static_cast<int>(pv.size()) - 2;
  }
  /// Internal index for an external bus label, -1 when unknown.
  int index_of(int external_id) const;
  /// Generator record attached to an internal bus index, nullptr when none.
  const Gen* gen_at(int bus_index) const;
  /// PV-bus magnitude setpoint: generator Vg when present, case Vm otherwise.
  double voltage_setpoint(int bus_index) const;
};

/// Parses the supported MATPOWER case subset: numeric matrices for baseMVA,
/// bus, gen, and branch, with % comments stripped. Demand, generation, and
/// shunt data stay in file units (MW/MVAr); every solver-facing accessor
/// converts to per-unit on the system base. Angles are stored in radians.
Network parse_case(std::string_view text,
                   BprimeStyle style = BprimeStyle::SeriesImpedance);
Network parse_case_file(const std::string& path,
                        BprimeStyle style = BprimeStyle::SeriesImpedance);

/// Assembles the nodal admittance matrix and the shunt-free, charging-free
/// susceptance matrix from the bus/branch data.
std::pair<ComplexMatrix, Matrix> build_admittance(
    const Network& net, BprimeStyle style = BprimeStyle::SeriesImpedance);

/// Emits the network as a case file that parses back to an identical Network.
std::string serialize_case(const Network& net);

}  // namespace gridflow
