#include "eah/samples.hpp"

namespace eah {

std::string_view sample_text_200() {
    return "abedcababedccabedcedcababedcedcccabedcabedcedccababedcabedc"
           "cccedccedccedcababedcabedcedccedcababedcabedccabedcababedcedcccc"
           "cedcabedcabedccccedcccabedcccedccabedccccabedccababedcabedcedcca"
           "bedcababedced";
}

std::string_view sample_text_9() { return "abdbacdba"; }

}  // namespace eah
