#include "esdmem/metric.hpp"

#include <charconv>

#include "esdmem/errors.hpp"

namespace esdmem {

namespace {

int parse_index(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ArgumentError("bad qubit index in metric '" + std::string(whole) + "'");
  }
  return value;
}

QubitSet parse_index_list(std::string_view list, std::string_view whole) {
  QubitSet out;
  while (true) {
    const auto comma = list.find(',');
    out.push_back(parse_index(list.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

MetricId MetricId::parse(std::string_view text) {
  if (text == "fid") return state_fidelity();
  if (text == "sfid") return stored_fidelity();
  if (text == "n3") return n3();
  if (text.starts_with("n3:trace")) return n3(parse_index(text.substr(8), text));
  if (text.starts_with("neg:")) return negativity(parse_index_list(text.substr(4), text));
  if (text.starts_with("conc:")) {
    QubitSet pair = parse_index_list(text.substr(5), text);
    if (pair.size() != 2) throw ArgumentError("concurrence takes exactly two qubits");
    return concurrence(pair[0], pair[1]);
  }
  throw ArgumentError("unknown metric '" + std::string(text) + "'");
}

std::string MetricId::to_string() const {
  auto join = [](const QubitSet& qs) {
    std::string out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(qs[i]);
    }
    return out;
  };
  switch (kind) {
    case Kind::negativity:
      return "neg:" + join(qubits);
    case Kind::concurrence:
      return "conc:" + join(qubits);
    case Kind::n3:
      return traced == 0 ? "n3" : "n3:trace" + std::to_string(traced);
    case Kind::stored_fidelity:
      return "sfid";
    case Kind::state_fidelity:
      return "fid";
  }
  return "?";
}

void check_metric(const MetricId& metric, int n_qubits) {
  switch (metric.kind) {
    case MetricId::Kind::negativity:
      if (metric.qubits.empty()) throw ArgumentError("negativity needs a nonempty subset");
      check_qubits(metric.qubits, n_qubits);
      break;
    case MetricId::Kind::concurrence:
      if (metric.qubits.size() != 2) throw ArgumentError("concurrence takes exactly two qubits");
      check_qubits(metric.qubits, n_qubits);
      break;
    case MetricId::Kind::n3:
      if (n_qubits == 3) {
        if (metric.traced != 0) throw ArgumentError("N3 on three qubits traces nothing");
      } else if (n_qubits == 4) {
        if (metric.traced != 0) check_qubits({metric.traced}, 4);
      } else {
        throw ArgumentError("N3 needs a three- or four-qubit code");
      }
      break;
    case MetricId::Kind::stored_fidelity:
    case MetricId::Kind::state_fidelity:
      break;
  }
}

}  // namespace esdmem
