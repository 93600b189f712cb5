// Acceptance suite lands here.
