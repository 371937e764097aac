#include "rlqas/problems/hamiltonian_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rlqas::problems {

using nlohmann::json;

qsim::PauliHamiltonian hamiltonian_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("hamiltonian parse error: ") + e.what());
  }
  qsim::PauliHamiltonian h;
  try {
    h.n_qubits = doc.at("n_qubits").get<int>();
    for (const auto& t : doc.at("terms")) {
      if (!t.is_array() || t.size() != 2)
        throw std::runtime_error("each term must be [coefficient, pauli_string]");
      h.terms.push_back({t[0].get<double>(), t[1].get<std::string>()});
    }
    if (doc.contains("name")) h.name = doc["name"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("hamiltonian schema error: ") + e.what());
  }
  h.validate();

  const bool has_energy = doc.contains("ground_energy");
  if (h.n_qubits > 8) {
    if (!has_energy)
      throw std::runtime_error(
          "hamiltonians above 8 qubits must supply ground_energy");
    h.ground_energy = doc["ground_energy"].get<double>();
    return h;
  }
  const double exact = qsim::min_eigenvalue(h);
  if (has_energy) {
    h.ground_energy = doc["ground_energy"].get<double>();
    if (std::abs(h.ground_energy - exact) > 1e-9) {
      std::ostringstream msg;
      msg << "ground_energy " << h.ground_energy
          << " disagrees with exact diagonalization " << exact;
      throw std::runtime_error(msg.str());
    }
  } else {
    h.ground_energy = exact;
  }
  return h;
}

qsim::PauliHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hamiltonian file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return hamiltonian_from_json_text(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string hamiltonian_to_json_text(const qsim::PauliHamiltonian& h) {
  json doc;
  if (!h.name.empty()) doc["name"] = h.name;
  doc["n_qubits"] = h.n_qubits;
  doc["terms"] = json::array();
  for (const auto& t : h.terms) doc["terms"].push_back({t.coefficient, t.paulis});
  doc["ground_energy"] = h.ground_energy;
  return doc.dump(2);
}

void save_hamiltonian(const qsim::PauliHamiltonian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write hamiltonian file: " + path);
  out << hamiltonian_to_json_text(h) << "\n";
}

}  // namespace rlqas::problems
