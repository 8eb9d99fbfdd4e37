#include "qsdc/classical.hpp"

#include <algorithm>

namespace qsdc {

bool leaks_before_request(const std::vector<ClassicalMessage>& log) {
  bool requested = false;
  for (const ClassicalMessage& msg : log) {
    switch (msg.kind) {
      case MessageKind::ResultsRequest:
        requested = true;
        break;
      case MessageKind::ResultsAnnouncement:
        if (!requested || !msg.payload) return true;
        break;
      case MessageKind::MeasurementDone:
        if (msg.payload) return true;
        break;
    }
  }
  return false;
}

void ReceiverStateMachine::on_measurement_done(int sender) {
  if (sender < 1 || sender > static_cast<int>(pending_.size())) {
    throw std::invalid_argument("unknown sender id");
  }
  pending_[sender - 1] = true;
}

void ReceiverStateMachine::on_own_measurement() { own_measured_ = true; }

bool ReceiverStateMachine::ready_to_request() const {
  return own_measured_ &&
         std::all_of(pending_.begin(), pending_.end(), [](bool b) { return b; });
}

void ReceiverStateMachine::request_results() {
  if (!ready_to_request()) {
    throw std::logic_error(
        "receiver may not request announcements before all measurements are done");
  }
  requested_ = true;
}

void ReceiverStateMachine::on_announcement(int sender) {
  if (!requested_) throw std::logic_error("announcement arrived before the request");
  if (sender < 1 || sender > static_cast<int>(announced_.size())) {
    throw std::invalid_argument("unknown sender id");
  }
  announced_[sender - 1] = true;
}

bool ReceiverStateMachine::all_announced() const {
  return std::all_of(announced_.begin(), announced_.end(), [](bool b) { return b; });
}

}  // namespace qsdc
