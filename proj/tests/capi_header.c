/* The public header must compile as C. */
#include "roughcm/roughcm.h"

int main(void) {
  rcm_fuzz_config config;
  rcm_fuzz_config_default(&config);
  config.trials = 5;
  rcm_fuzz_result* result = NULL;
  if (rcm_fuzz_run(&config, &result) != RCM_OK) return 1;
  int failed = rcm_fuzz_failed_trials(result) != 0;
  rcm_fuzz_free(result);
  return failed;
}
