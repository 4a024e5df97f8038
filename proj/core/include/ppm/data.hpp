#pragma once

namespace ppm::data {

// Text of the shipped curve-data files (see core/data).
const char* floer_twisted_curves();
const char* sc_log_curves();

}  // namespace ppm::data
