import click

from config.settings import settings
from core.utils import auto_discover_commands


@click.group()
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
def cli():
    """Distinguishing numbers of edge-transitive groups on K_{n,n} and crown graphs."""
    pass


auto_discover_commands(cli, "core.commands")

if __name__ == "__main__":
    cli()
