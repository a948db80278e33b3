// placeholder — implemented in a later layer of the build
#include "nelab/common.hpp"
