// CLI contract tests land here.
