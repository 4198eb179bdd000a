#include "knots/rand.hpp"
