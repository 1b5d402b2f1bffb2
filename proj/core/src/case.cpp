#include "gridflow/case.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace gridflow {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RawRow {
  std::vector<double> values;
  int line = 0;
};

struct RawCase {
  double base_mva = 0.0;
  bool have_base = false;
  std::map<std::string, std::vector<RawRow>> blocks;
};

bool parse_double(std::string_view token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<double> tokenize_row(std::string_view line, int line_no) {
  std::vector<double> values;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != ',' && line[j] != ';') {
      ++j;
    }
    double v = 0.0;
    if (!parse_double(line.substr(i, j - i), v)) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "unparsable token '" + std::string(line.substr(i, j - i)) + "'",
                       line_no);
    }
    values.push_back(v);
    i = j;
  }
  return values;
}

RawCase scan_case(std::string_view text) {
  RawCase raw;
  std::string block_name;
  bool in_block = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (std::size_t cmt = line.find('%'); cmt != std::string_view::npos) {
      line = line.substr(0, cmt);
    }
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (!in_block) {
      if (line.rfind("function", 0) == 0) continue;
      if (line.rfind("mpc.", 0) != 0) continue;
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) continue;
      std::string name(line.substr(4, line.find_first_of(" \t=", 4) - 4));
      std::string_view rhs = line.substr(eq + 1);
      std::size_t rb = rhs.find_first_not_of(" \t");
      if (rb == std::string_view::npos) continue;
      rhs = rhs.substr(rb);
      if (name == "baseMVA") {
        std::size_t semi = rhs.find(';');
        if (semi != std::string_view::npos) rhs = rhs.substr(0, semi);
        std::size_t re = rhs.find_last_not_of(" \t");
        double v = 0.0;
        if (re == std::string_view::npos ||
            !parse_double(rhs.substr(0, re + 1), v)) {
          throw ParseError(ParseErrorCode::MalformedRow, "bad baseMVA value",
                           line_no);
        }
        raw.base_mva = v;
        raw.have_base = true;
        continue;
      }
      if (rhs.rfind('[', 0) == 0) {
        block_name = name;
        in_block = true;
        raw.blocks.emplace(block_name, std::vector<RawRow>{});
        std::string_view rest = rhs.substr(1);
        if (std::size_t close = rest.find(']'); close != std::string_view::npos) {
          rest = rest.substr(0, close);
          in_block = false;
        }
        if (auto vals = tokenize_row(rest, line_no); !vals.empty()) {
          raw.blocks[block_name].push_back({std::move(vals), line_no});
        }
      }
      continue;
    }

    std::string_view row = line;
    if (std::size_t close = row.find(']'); close != std::string_view::npos) {
      row = row.substr(0, close);
      in_block = false;
    }
    if (auto vals = tokenize_row(row, line_no); !vals.empty()) {
      raw.blocks[block_name].push_back({std::move(vals), line_no});
    }
  }
  return raw;
}

const std::vector<RawRow>& require_block(const RawCase& raw, const std::string& name) {
  auto it = raw.blocks.find(name);
  if (it == raw.blocks.end() || it->second.empty()) {
    throw ParseError(ParseErrorCode::MissingBlock, "missing mpc." + name + " block");
  }
  return it->second;
}

}  // namespace

int Network::index_of(int external_id) const {
  for (int i = 0; i < size(); ++i) {
    if (buses[i].id == external_id) return i;
  }
  return -1;
}

const Gen* Network::gen_at(int bus_index) const {
  for (const Gen& g : gens) {
    if (g.bus == bus_index) return &g;
  }
  return nullptr;
}

double Network::voltage_setpoint(int bus_index) const {
  if (const Gen* g = gen_at(bus_index)) return g->vg;
  return buses[bus_index].vm;
}

Network parse_case(std::string_view text, BprimeStyle style) {
  RawCase raw = scan_case(text);
  if (!raw.have_base) {
    throw ParseError(ParseErrorCode::MissingBlock, "missing mpc.baseMVA");
  }

  Network net;
  net.base_mva = raw.base_mva;

  const auto& bus_rows = require_block(raw, "bus");
  std::map<int, int> index_by_id;
  int slack_count = 0;
  for (const RawRow& row : bus_rows) {
    if (row.values.size() < 13) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "bus row needs 13 columns, got " +
                           std::to_string(row.values.size()),
                       row.line);
    }
    Bus bus;
    bus.id = static_cast<int>(row.values[0]);
    int type = static_cast<int>(row.values[1]);
    switch (type) {
      case 1: bus.kind = BusKind::PQ; break;
      case 2: bus.kind = BusKind::PV; break;
      case 3: bus.kind = BusKind::Slack; ++slack_count; break;
      default:
        throw ParseError(ParseErrorCode::MalformedRow,
                         "unknown bus type " + std::to_string(type), row.line);
    }
    bus.pd_mw = row.values[2];
    bus.qd_mvar = row.values[3];
    bus.gs_mw = row.values[4];
    bus.bs_mvar = row.values[5];
    bus.area = row.values[6];
    bus.vm = row.values[7];
    bus.va_rad = row.values[8] * kPi / 180.0;
    bus.base_kv = row.values[9];
    bus.zone = row.values[10];
    bus.vmax = row.values[11];
    bus.vmin = row.values[12];
    if (index_by_id.count(bus.id)) {
      throw ParseError(ParseErrorCode::DuplicateBusId,
                       "duplicate bus id " + std::to_string(bus.id), row.line);
    }
    index_by_id[bus.id] = static_cast<int>(net.buses.size());
    net.buses.push_back(bus);
  }
  if (slack_count == 0) {
    throw ParseError(ParseErrorCode::NoSlackBus, "no slack bus in case");
  }
  if (slack_count > 1) {
    throw ParseError(ParseErrorCode::MultipleSlackBuses,
                     std::to_string(slack_count) + " slack buses in case");
  }

  for (int i = 0; i < net.size(); ++i) {
    switch (net.buses[i].kind) {
      case BusKind::Slack: net.slack = i; break;
      case BusKind::PV: net.pv.push_back(i); break;
      case BusKind::PQ: net.pq.push_back(i); break;
    }
  }

  const auto& gen_rows = require_block(raw, "gen");
  for (const RawRow& row : gen_rows) {
    if (row.values.size() < 6) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "gen row needs 6 columns, got " +
                           std::to_string(row.values.size()),
                       row.line);
    }
    if (row.values.size() >= 8 && row.values[7] == 0.0) continue;  // offline unit
    int bus_id = static_cast<int>(row.values[0]);
    auto it = index_by_id.find(bus_id);
    if (it == index_by_id.end()) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "gen references unknown bus " + std::to_string(bus_id),
                       row.line);
    }
    int idx = it->second;
    bool merged = false;
    for (Gen& g : net.gens) {
      if (g.bus == idx) {  // parallel units: sum output, keep first setpoint
        g.pg_mw += row.values[1];
        g.qg_mvar += row.values[2];
        merged = true;
        break;
      }
    }
    if (!merged) {
      Gen g;
      g.bus = idx;
      g.pg_mw = row.values[1];
      g.qg_mvar = row.values[2];
      g.qmax_mvar = row.values[3];
      g.qmin_mvar = row.values[4];
      g.vg = row.values[5];
      net.gens.push_back(g);
    }
  }

  const auto& branch_rows = require_block(raw, "branch");
  for (const RawRow& row : branch_rows) {
    if (row.values.size() < 11) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "branch row needs 11 columns, got " +
                           std::to_string(row.values.size()),
                       row.line);
    }
    Branch br;
    auto from_it = index_by_id.find(static_cast<int>(row.values[0]));
    auto to_it = index_by_id.find(static_cast<int>(row.values[1]));
    if (from_it == index_by_id.end() || to_it == index_by_id.end()) {
      throw ParseError(ParseErrorCode::MalformedRow,
                       "branch references unknown bus", row.line);
    }
    br.from = from_it->second;
    br.to = to_it->second;
    br.r = row.values[2];
    br.x = row.values[3];
    br.b_c = row.values[4];
    br.rate_a = row.values[5];
    br.rate_b = row.values[6];
    br.rate_c = row.values[7];
    double tap = row.values[8];
    if (tap < 0.0) {
      throw ParseError(ParseErrorCode::MalformedRow, "negative tap ratio",
                       row.line);
    }
    br.tap = tap == 0.0 ? 1.0 : tap;
    br.shift_rad = row.values[9] * kPi / 180.0;
    br.in_service = row.values[10] != 0.0;
    net.branches.push_back(br);
  }

  auto [y, bp] = build_admittance(net, style);
  net.ybus = std::move(y);
  net.bprime = std::move(bp);
  return net;
}

Network parse_case_file(const std::string& path, BprimeStyle style) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseErrorCode::MissingBlock, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str(), style);
}

std::pair<ComplexMatrix, Matrix> build_admittance(const Network& net,
                                                  BprimeStyle style) {
  const int n = net.size();
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  ComplexMatrix yb = ComplexMatrix::Zero(n, n);  // no shunts, no charging

  for (std::size_t k = 0; k < net.branches.size(); ++k) {
    const Branch& br = net.branches[k];
    if (!br.in_service) continue;
    if (br.r == 0.0 && br.x == 0.0) {
      throw ZeroImpedanceBranchError(static_cast<int>(k));
    }
    const Complex ys = 1.0 / Complex(br.r, br.x);
    const Complex tap = std::polar(br.tap, br.shift_rad);
    const double t2 = br.tap * br.tap;
    const Complex charge(0.0, br.b_c / 2.0);

    y(br.from, br.from) += (ys + charge) / t2;
    y(br.to, br.to) += ys + charge;
    y(br.from, br.to) += -ys / std::conj(tap);
    y(br.to, br.from) += -ys / tap;

    Complex ysb = ys;
    if (style == BprimeStyle::ReactanceOnly && br.x != 0.0) {
      ysb = 1.0 / Complex(0.0, br.x);
    }
    yb(br.from, br.from) += ysb / t2;
    yb(br.to, br.to) += ysb;
    yb(br.from, br.to) += -ysb / std::conj(tap);
    yb(br.to, br.from) += -ysb / tap;
  }

  for (int i = 0; i < n; ++i) {
    y(i, i) += Complex(net.buses[i].gs_mw, net.buses[i].bs_mvar) / net.base_mva;
  }

  Matrix bprime = yb.imag();
  return {std::move(y), std::move(bprime)};
}

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string serialize_case(const Network& net) {
  std::string out;
  out += "function mpc = gridflow_case\n";
  out += "mpc.version = '2';\n";
  out += "mpc.baseMVA = ";
  append_number(out, net.base_mva);
  out += ";\n\nmpc.bus = [\n";
  for (const Bus& b : net.buses) {
    double cols[13] = {static_cast<double>(b.id),
                       b.kind == BusKind::Slack ? 3.0
                       : b.kind == BusKind::PV  ? 2.0
                                                : 1.0,
                       b.pd_mw,
                       b.qd_mvar,
                       b.gs_mw,
                       b.bs_mvar,
                       b.area,
                       b.vm,
                       b.va_rad * 180.0 / kPi,
                       b.base_kv,
                       b.zone,
                       b.vmax,
                       b.vmin};
    out += '\t';
    for (double c : cols) {
      append_number(out, c);
      out += '\t';
    }
    out += ";\n";
  }
  out += "];\n\nmpc.gen = [\n";
  for (const Gen& g : net.gens) {
    double cols[8] = {static_cast<double>(net.buses[g.bus].id),
                      g.pg_mw,
                      g.qg_mvar,
                      g.qmax_mvar,
                      g.qmin_mvar,
                      g.vg,
                      net.base_mva,
                      1.0};
    out += '\t';
    for (double c : cols) {
      append_number(out, c);
      out += '\t';
    }
    out += ";\n";
  }
  out += "];\n\nmpc.branch = [\n";
  for (const Branch& br : net.branches) {
    double cols[11] = {static_cast<double>(net.buses[br.from].id),
                       static_cast<double>(net.buses[br.to].id),
                       br.r,
                       br.x,
                       br.b_c,
                       br.rate_a,
                       br.rate_b,
                       br.rate_c,
                       br.tap,
                       br.shift_rad * 180.0 / kPi,
                       br.in_service ? 1.0 : 0.0};
    out += '\t';
    for (double c : cols) {
      append_number(out, c);
      out += '\t';
    }
    out += ";\n";
  }
  out += "];\n";
  return out;
}

}  // namespace gridflow
