#pragma once

#define ONGATE_VERSION "0.1.0"
